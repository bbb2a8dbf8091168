#pragma once

#include <utility>
#include <vector>

#include "bona/bigint.hpp"
#include "bona/errors.hpp"

namespace bona {

// Dense univariate polynomial with coefficients in an exact ring T,
// stored constant term first. The zero polynomial has no coefficients
// and degree -1; all constructors strip trailing zeros so that equal
// polynomials compare equal memberwise.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial monomial(T coeff, int degree) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of x^i; zero outside the stored range.
  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return T(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<T>& coeffs() const { return coeffs_; }

  const T& leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    }
    return Polynomial(std::move(d));
  }

  // Horner evaluation in any ring X that embeds the coefficients.
  template <typename X>
  X eval(const X& x) const {
    X acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * x + X(coeffs_[i]);
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> c = p.coeffs_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& p) {
    return T(-1) * p;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRat>;

// Coefficientwise exact division; throws ExactnessError on any remainder.
IntPolynomial divide_exact(const IntPolynomial& p, const BigInt& divisor);

// gcd of the coefficients (positive; 0 for the zero polynomial).
BigInt content(const IntPolynomial& p);

// p divided by its content. The sign of the leading coefficient is kept.
IntPolynomial primitive_part(const IntPolynomial& p);

RatPolynomial to_rational(const IntPolynomial& p);

// Clears denominators and strips content, preserving sign: the result is a
// primitive integer polynomial that is a positive rational multiple of p.
IntPolynomial to_primitive_integer(const RatPolynomial& p);

// Remainder of a by b over the rationals (degree(rem) < degree(b)).
RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b);

// Exact quotient over the rationals; throws ExactnessError unless b | a.
RatPolynomial divide_exact(const RatPolynomial& a, const RatPolynomial& b);

// Primitive gcd with positive leading coefficient (Euclid over Q, then
// normalized). gcd(0, 0) is the zero polynomial.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace bona
