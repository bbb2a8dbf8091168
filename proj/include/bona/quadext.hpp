#pragma once

#include <string>
#include <vector>

#include "bona/bigint.hpp"

namespace bona {

// An exact real number a + b*sqrt(d) with a, b rational and d a positive
// non-square integer (d == 0 and b == 0 for plain rationals). Arithmetic
// between two values requires them to live in the same extension, i.e.
// share d, unless one of them is rational. Comparisons work across
// different extensions via an algebraic equality test plus interval
// refinement, so no floating point is involved anywhere.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int v) : a_(v) {}
  QuadExt(const BigInt& v) : a_(v) {}
  QuadExt(const BigRat& v) : a_(v) {}

  // sqrt(radicand) for a rational radicand >= 0. Square factors are
  // folded into the rational coefficient, so sqrt(49/4) comes back as
  // the plain rational 7/2.
  static QuadExt sqrt_of(const BigRat& radicand);

  const BigRat& rational_part() const { return a_; }
  const BigRat& surd_part() const { return b_; }
  const BigInt& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  // -1, 0 or +1; exact, via comparing a^2 against b^2 d when the two
  // terms pull in opposite directions.
  int sign() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) {
    QuadExt r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  QuadExt pow(int e) const;  // requires e >= 0

  std::string str() const;

 private:
  // Aligns d_ for arithmetic; throws DomainError when both operands carry
  // different irrational parts.
  static BigInt common_radicand(const QuadExt& x, const QuadExt& y);

  BigRat a_ = BigRat(0);
  BigRat b_ = BigRat(0);
  BigInt d_ = BigInt(0);
};

// Total order across extensions: -1, 0, +1 as x <, ==, > y.
int compare(const QuadExt& x, const QuadExt& y);

inline bool operator==(const QuadExt& x, const QuadExt& y) { return compare(x, y) == 0; }
inline bool operator!=(const QuadExt& x, const QuadExt& y) { return compare(x, y) != 0; }
inline bool operator<(const QuadExt& x, const QuadExt& y) { return compare(x, y) < 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return compare(x, y) > 0; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return compare(x, y) <= 0; }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return compare(x, y) >= 0; }

struct QuadRoots {
  QuadExt r1;  // (-(1+u) + sqrt(u^2-6u+1)) / 2
  QuadExt r2;  // (-(1+u) - sqrt(u^2-6u+1)) / 2
};

// The two real roots of t^2 + (1+u)t + 2u for rational u < 0. The
// discriminant u^2-6u+1 is >= 1 there, so both roots are real and, since
// their product is 2u < 0, nonzero with opposite signs.
QuadRoots quad_r1_r2(const BigRat& u);  // throws DomainError unless u < 0

// q(u) = r1/r2, the root ratio; negative for u < 0.
QuadExt q_of(const BigRat& u);

// Exact identity test: the degree-n row polynomial evaluated at u must
// equal u (-1)^(n-1) r2^(n-1) N_n(q(u)) / (n q(u)) with N_n the scaled
// Narayana polynomial. Evaluated entirely in Q(sqrt(u^2-6u+1)); the surd
// component of the right side must vanish (ExactnessError otherwise) and
// the rational parts are compared exactly.
bool check_bona_from_narayana(int n, const BigRat& u);

// True iff q is negative and strictly increasing across the given
// strictly-increasing negative sample points.
bool check_q_monotone(const std::vector<BigRat>& samples);

// True iff u^2 - 6u + 1 >= 1 at every sample; callers pass u <= 0 grids.
bool check_delta_at_least_one(const std::vector<BigRat>& samples);

}  // namespace bona
