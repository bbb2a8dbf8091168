#include "bona/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace bona {

IntPolynomial divide_exact(const IntPolynomial& p, const BigInt& divisor) {
  std::vector<BigInt> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = divide_exact(p.coeffs()[i], divisor);
  }
  return IntPolynomial(std::move(c));
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  return divide_exact(p, content(p));
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRat> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = BigRat(p.coeffs()[i]);
  return RatPolynomial(std::move(c));
}

IntPolynomial to_primitive_integer(const RatPolynomial& p) {
  if (p.is_zero()) return IntPolynomial();
  BigInt common_den = 1;
  for (const auto& c : p.coeffs()) common_den = lcm(common_den, denominator(c));
  std::vector<BigInt> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = numerator(p.coeffs()[i]) * (common_den / denominator(p.coeffs()[i]));
  }
  return primitive_part(IntPolynomial(std::move(c)));
}

RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial remainder by zero");
  std::vector<BigRat> r = a.coeffs();
  const int db = b.degree();
  const BigRat lead = b.leading();
  for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
    const BigRat q = r[static_cast<std::size_t>(d)] / lead;
    if (q == 0) continue;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(d - db + i)] -= q * b.coeff(i);
    }
  }
  if (static_cast<int>(r.size()) > db) r.resize(static_cast<std::size_t>(db));
  return RatPolynomial(std::move(r));
}

RatPolynomial divide_exact(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigRat> r = a.coeffs();
  const int db = b.degree();
  const BigRat lead = b.leading();
  std::vector<BigRat> q(
      a.degree() >= db ? static_cast<std::size_t>(a.degree() - db) + 1 : 0,
      BigRat(0));
  for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
    const BigRat f = r[static_cast<std::size_t>(d)] / lead;
    q[static_cast<std::size_t>(d - db)] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(d - db + i)] -= f * b.coeff(i);
    }
  }
  for (const auto& c : r) {
    if (c != 0) throw ExactnessError("polynomial division expected to be exact was not");
  }
  return RatPolynomial(std::move(q));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RatPolynomial x = to_rational(primitive_part(a));
  RatPolynomial y = to_rational(primitive_part(b));
  while (!y.is_zero()) {
    RatPolynomial r = remainder(x, y);
    x = std::move(y);
    // Re-normalizing each remainder keeps coefficient growth polynomial.
    y = to_rational(to_primitive_integer(r));
  }
  IntPolynomial g = to_primitive_integer(x);
  if (!g.is_zero() && g.leading() < 0) g = BigInt(-1) * g;
  return g;
}

}  // namespace bona
