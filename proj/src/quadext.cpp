#include "bona/quadext.hpp"

#include <utility>

#include "bona/bona_poly.hpp"
#include "bona/errors.hpp"

namespace bona {

namespace {

// Splits m > 0 as f^2 * r with r free of square factors below the trial
// bound. Small primes are divided out; whatever large cofactor remains is
// kept in r unless it is itself a perfect square. The representation only
// needs r to be a non-square, which the caller re-checks.
void split_square_part(BigInt m, BigInt& f, BigInt& r) {
  f = 1;
  r = 1;
  for (BigInt p = 2; p * p <= m && p < 100000; ++p) {
    while (m % (p * p) == 0) {
      f *= p;
      m /= p * p;
    }
    if (m % p == 0) {
      r *= p;
      m /= p;
    }
  }
  const BigInt root = sqrt(m);
  if (root * root == m) {
    f *= root;
  } else {
    r *= m;
  }
}

// Closed rational interval bracketing sqrt(m) for a positive non-square
// integer m, refined by `rounds` bisection steps.
struct SqrtBracket {
  BigRat lo, hi;
  BigInt m;
  void refine() {
    const BigRat mid = (lo + hi) / 2;
    if (mid * mid < BigRat(m)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
};

SqrtBracket bracket_sqrt(const BigInt& m) {
  const BigInt root = sqrt(m);
  return SqrtBracket{BigRat(root), BigRat(root + 1), m};
}

}  // namespace

QuadExt QuadExt::sqrt_of(const BigRat& radicand) {
  if (radicand < 0) throw DomainError("sqrt of a negative rational");
  if (radicand == 0) return QuadExt();
  // sqrt(p/q) = sqrt(pq) / q.
  const BigInt p = numerator(radicand);
  const BigInt q = denominator(radicand);
  BigInt f, r;
  split_square_part(p * q, f, r);
  QuadExt out;
  if (r == 1) {
    out.a_ = BigRat(f, q);
    return out;
  }
  out.b_ = BigRat(f, q);
  out.d_ = r;
  return out;
}

BigInt QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_) {
    throw DomainError("arithmetic across different quadratic extensions (sqrt(" +
                      x.d_.str() + ") vs sqrt(" + y.d_.str() + "))");
  }
  return x.d_;
}

int QuadExt::sign() const {
  if (b_ == 0) return bona::sign(a_);
  if (a_ == 0) return bona::sign(b_);
  const int sa = bona::sign(a_);
  const int sb = bona::sign(b_);
  if (sa == sb) return sa;
  // Opposite pulls: |a| vs |b| sqrt(d) decides, and equality would force
  // d to be a rational square, which the constructor has excluded.
  const BigRat a2 = a_ * a_;
  const BigRat b2d = b_ * b_ * BigRat(d_);
  if (a2 == b2d) {
    throw ExactnessError("non-square radicand " + d_.str() +
                         " behaved like a square");
  }
  return a2 > b2d ? sa : sb;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const BigInt d = common_radicand(*this, o);
  const BigRat a = a_ * o.a_ + b_ * o.b_ * BigRat(d);
  const BigRat b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = (b_ == 0) ? BigInt(0) : d;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  const BigInt d = common_radicand(*this, o);
  // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d).
  const BigRat norm = o.a_ * o.a_ - o.b_ * o.b_ * BigRat(d);
  if (norm == 0) {
    if (o.a_ == 0 && o.b_ == 0) throw DomainError("division by zero");
    throw ExactnessError("non-square radicand " + d.str() +
                         " behaved like a square");
  }
  QuadExt conj;
  conj.a_ = o.a_ / norm;
  conj.b_ = -o.b_ / norm;
  conj.d_ = (conj.b_ == 0) ? BigInt(0) : d;
  return *this *= conj;
}

QuadExt QuadExt::pow(int e) const {
  if (e < 0) throw DomainError("pow requires a nonnegative exponent");
  QuadExt acc(BigInt(1));
  QuadExt base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string QuadExt::str() const {
  if (b_ == 0) return to_decimal(a_);
  std::string s = to_decimal(a_);
  s += (b_ > 0) ? " + " : " - ";
  const BigRat babs = b_ > 0 ? b_ : BigRat(-b_);
  if (babs != 1) s += to_decimal(babs) + "*";
  s += "sqrt(" + d_.str() + ")";
  return s;
}

int compare(const QuadExt& x, const QuadExt& y) {
  // Same extension (or a rational side): subtract and read the sign.
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    return (x - y).sign();
  }
  // Different extensions. Equality would force the two irrational parts
  // to coincide as real numbers, which happens exactly when the rational
  // parts match and b sqrt(d) == b' sqrt(d'), i.e. equal signs and equal
  // squares. The squared test is independent of how d was normalized.
  const bool equal =
      x.rational_part() == y.rational_part() &&
      sign(x.surd_part()) == sign(y.surd_part()) &&
      x.surd_part() * x.surd_part() * BigRat(x.radicand()) ==
          y.surd_part() * y.surd_part() * BigRat(y.radicand());
  if (equal) return 0;
  // Distinct values: bracket each in a shrinking rational interval until
  // the intervals separate. Termination is guaranteed because the gap is
  // a fixed positive number and both widths halve every round.
  SqrtBracket bx = bracket_sqrt(x.radicand());
  SqrtBracket by = bracket_sqrt(y.radicand());
  const auto lo_of = [](const QuadExt& v, const SqrtBracket& b) {
    return v.rational_part() +
           (v.surd_part() > 0 ? v.surd_part() * b.lo : v.surd_part() * b.hi);
  };
  const auto hi_of = [](const QuadExt& v, const SqrtBracket& b) {
    return v.rational_part() +
           (v.surd_part() > 0 ? v.surd_part() * b.hi : v.surd_part() * b.lo);
  };
  while (true) {
    if (hi_of(x, bx) < lo_of(y, by)) return -1;
    if (hi_of(y, by) < lo_of(x, bx)) return 1;
    bx.refine();
    by.refine();
  }
}

QuadRoots quad_r1_r2(const BigRat& u) {
  if (u >= 0) throw DomainError("root split requires u < 0");
  const BigRat delta = u * u - 6 * u + 1;
  const QuadExt s = QuadExt::sqrt_of(delta);
  const QuadExt minus_trace = QuadExt(BigRat(-(1 + u)));
  QuadRoots roots;
  roots.r1 = (minus_trace + s) / QuadExt(BigInt(2));
  roots.r2 = (minus_trace - s) / QuadExt(BigInt(2));
  return roots;
}

QuadExt q_of(const BigRat& u) {
  const QuadRoots roots = quad_r1_r2(u);
  return roots.r1 / roots.r2;
}

bool check_bona_from_narayana(int n, const BigRat& u) {
  if (n < 1) throw DomainError("check_bona_from_narayana requires n >= 1");
  const QuadRoots roots = quad_r1_r2(u);
  const QuadExt q = roots.r1 / roots.r2;
  const QuadExt n_at_q = narayana_poly(n).eval<QuadExt>(q);
  const int parity = (n % 2 == 1) ? 1 : -1;
  const QuadExt rhs = QuadExt(u) * QuadExt(BigInt(parity)) *
                      roots.r2.pow(n - 1) * n_at_q /
                      (QuadExt(BigInt(n)) * q);
  if (rhs.surd_part() != 0) {
    throw ExactnessError("irrational residue in the root-ratio identity at n=" +
                         std::to_string(n) + ", u=" + to_decimal(u));
  }
  const BigRat lhs = bona_poly(n).eval<BigRat>(u);
  return lhs == rhs.rational_part();
}

bool check_q_monotone(const std::vector<BigRat>& samples) {
  if (samples.size() < 2) throw DomainError("need at least two sample points");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i] >= 0) throw DomainError("samples must be negative");
    if (i > 0 && samples[i - 1] >= samples[i]) {
      throw DomainError("samples must be strictly increasing");
    }
  }
  QuadExt prev = q_of(samples[0]);
  if (prev.sign() >= 0) return false;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const QuadExt cur = q_of(samples[i]);
    if (cur.sign() >= 0) return false;
    if (compare(prev, cur) >= 0) return false;
    prev = cur;
  }
  return true;
}

bool check_delta_at_least_one(const std::vector<BigRat>& samples) {
  for (const auto& u : samples) {
    if (u * u - 6 * u + 1 < 1) return false;
  }
  return true;
}

}  // namespace bona
