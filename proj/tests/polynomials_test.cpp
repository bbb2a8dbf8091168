#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "bona/bona_poly.hpp"
#include "bona/errors.hpp"
#include "bona/numbers.hpp"
#include "bona/polynomial.hpp"
#include "bona/quadext.hpp"
#include "bona/sturm.hpp"

using bona::BigInt;
using bona::BigRat;
using bona::IntPolynomial;
using bona::QuadExt;
using bona::RatPolynomial;

namespace {

IntPolynomial ipoly(std::vector<long long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic and normalization") {
  const IntPolynomial p = ipoly({1, 2, 3});
  const IntPolynomial q = ipoly({0, 1});
  CHECK(p.degree() == 2);
  CHECK((p + q) == ipoly({1, 3, 3}));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK((p * q) == ipoly({0, 1, 2, 3}));
  CHECK((BigInt(2) * p) == ipoly({2, 4, 6}));
  CHECK((-q) == ipoly({0, -1}));
  CHECK(ipoly({1, 0, 0}) == ipoly({1}));  // trailing zeros trimmed
  CHECK(p.coeff(5) == 0);
  CHECK(p.coeff(-1) == 0);
  CHECK(p.derivative() == ipoly({2, 6}));
  CHECK(ipoly({7}).derivative().is_zero());
  CHECK(p.eval<BigRat>(BigRat(2)) == 17);
  CHECK_THROWS_AS(IntPolynomial().leading(), bona::DomainError);
}

TEST_CASE("content, primitive part and exact division") {
  const IntPolynomial p = ipoly({6, -9, 12});
  CHECK(bona::content(p) == 3);
  CHECK(bona::primitive_part(p) == ipoly({2, -3, 4}));
  CHECK(bona::content(ipoly({-4, -8})) == 4);
  // The sign of the leading coefficient survives.
  CHECK(bona::primitive_part(ipoly({4, -8})) == ipoly({1, -2}));
  CHECK(bona::divide_exact(p, BigInt(3)) == ipoly({2, -3, 4}));
  CHECK_THROWS_AS(bona::divide_exact(p, BigInt(4)), bona::ExactnessError);
}

TEST_CASE("rational remainder and gcd") {
  // (x-1)(x-2) and (x-1)(x+3) share exactly x-1.
  const IntPolynomial a = ipoly({2, -3, 1});
  const IntPolynomial b = ipoly({-3, 2, 1});
  CHECK(bona::poly_gcd(a, b) == ipoly({-1, 1}));
  CHECK(bona::poly_gcd(a, ipoly({1})) == ipoly({1}));
  CHECK(bona::remainder(bona::to_rational(a), bona::to_rational(ipoly({-1, 1})))
            .is_zero());
  const RatPolynomial quot = bona::divide_exact(
      bona::to_rational(a), bona::to_rational(ipoly({-1, 1})));
  CHECK(quot == bona::to_rational(ipoly({-2, 1})));
  CHECK_THROWS_AS(bona::divide_exact(bona::to_rational(a),
                                     bona::to_rational(ipoly({0, 1}))),
                  bona::ExactnessError);
  // gcd coefficients can require clearing denominators along the way.
  const IntPolynomial c = ipoly({0, 2, 3, 1});   // x(x+1)(x+2)
  const IntPolynomial d = ipoly({0, -2, 1, 1});  // x(x+2)(x-1)
  CHECK(bona::poly_gcd(c, d) == ipoly({0, 2, 1}));
}

TEST_CASE("row polynomials from the recurrence") {
  CHECK(bona::bona_poly(1) == ipoly({0, 1}));
  CHECK(bona::bona_poly(2) == ipoly({0, 1, 1}));
  CHECK(bona::bona_poly(3) == ipoly({0, 1, 4, 1}));
  CHECK(bona::bona_poly(4) == ipoly({0, 1, 9, 9, 1}));
  CHECK(bona::bona_poly(5) == ipoly({0, 1, 16, 38, 16, 1}));
  CHECK_THROWS_AS(bona::bona_poly(0), bona::DomainError);

  // Coefficients must track the triangle for every larger n too.
  const auto rows = bona::bona_poly_list(20);
  const bona::Triangle t = bona::bona_explicit_triangle(20);
  for (int n = 1; n <= 20; ++n) {
    const IntPolynomial& p = rows[static_cast<std::size_t>(n - 1)];
    CHECK(p.degree() == n);
    CHECK(p.coeff(0) == 0);
    for (int k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(p.coeff(k) == t.at(n, k));
    }
  }
}

TEST_CASE("scaled narayana polynomials") {
  CHECK(bona::narayana_poly(1) == ipoly({0, 1}));
  CHECK(bona::narayana_poly(2) == ipoly({0, 2, 2}));
  CHECK(bona::narayana_poly(3) == ipoly({0, 3, 9, 3}));
  CHECK_THROWS_AS(bona::narayana_poly(0), bona::DomainError);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(bona::narayana_poly(n).coeff(k) == BigInt(n) * bona::narayana(n, k));
    }
  }
}

TEST_CASE("three-term recurrence checks") {
  int bad = 0;
  CHECK(bona::bona_poly_recurrence_check(30, &bad));
  CHECK(bona::narayana_poly_recurrence_check(20, &bad));
  CHECK_THROWS_AS(bona::narayana_poly_recurrence_check(2), bona::DomainError);
  CHECK(bona::liu_wang_hypotheses_check(25));
}

TEST_CASE("sturm chains count real roots") {
  // (x^2-2)(x^2-3): four real roots.
  const IntPolynomial p = ipoly({6, 0, -5, 0, 1});
  CHECK(bona::sturm_real_root_count(p) == 4);
  CHECK(bona::sturm_real_rooted_simple(p));
  // x^2+1: none.
  CHECK(bona::sturm_real_root_count(ipoly({1, 0, 1})) == 0);
  CHECK_FALSE(bona::sturm_real_rooted_simple(ipoly({1, 0, 1})));
  // x^3-x: roots -1, 0, 1; count by interval, closed on both ends.
  const IntPolynomial cubic = ipoly({0, -1, 0, 1});
  CHECK(bona::sturm_root_count_in(cubic, {BigRat(-1), BigRat(1)}) == 3);
  CHECK(bona::sturm_root_count_in(cubic, {BigRat(-1, 2), BigRat(1, 2)}) == 1);
  CHECK(bona::sturm_root_count_in(cubic, {BigRat(0), BigRat(1)}) == 2);
  CHECK(bona::sturm_root_count_in(cubic, {BigRat(2), BigRat(3)}) == 0);
  // Repeated roots are counted once.
  CHECK(bona::sturm_real_root_count(ipoly({1, -2, 1})) == 1);
  CHECK(bona::sturm_real_root_count(ipoly({5})) == 0);
  CHECK_THROWS_AS(bona::sturm_real_root_count(IntPolynomial()), bona::DomainError);
  CHECK_THROWS_AS(bona::sturm_root_count_in(cubic, {BigRat(1), BigRat(0)}),
                  bona::DomainError);
}

TEST_CASE("root isolation") {
  const BigRat precision(1, 1024);
  // (x^2-2)(x^2-3), roots near +-1.41 and +-1.73.
  const IntPolynomial p = ipoly({6, 0, -5, 0, 1});
  const auto intervals = bona::isolate_roots(p, precision);
  REQUIRE(intervals.size() == 4);
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    CHECK(intervals[i].hi - intervals[i].lo <= precision);
    CHECK(bona::sturm_root_count_in(p, intervals[i]) == 1);
    if (i > 0) CHECK(intervals[i - 1].hi < intervals[i].lo);
  }
  // The two middle roots are +-sqrt(2).
  CHECK(intervals[1].lo * intervals[1].lo > 2);
  CHECK(intervals[1].hi * intervals[1].hi < 2);
  CHECK(intervals[2].lo * intervals[2].lo < 2);
  CHECK(intervals[2].hi * intervals[2].hi > 2);

  CHECK(bona::isolate_roots(ipoly({1, 0, 1}), precision).empty());
  CHECK(bona::isolate_roots(ipoly({42}), precision).empty());
  CHECK_THROWS_AS(bona::isolate_roots(p, BigRat(0)), bona::DomainError);
  // (x-1)^2 must be refused, with a witness interval in the message.
  CHECK_THROWS_AS(bona::isolate_roots(ipoly({1, -2, 1}), precision),
                  bona::DomainError);
  // (x^2+1)^2 has no real repeated root, so it is fine.
  CHECK(bona::isolate_roots(ipoly({1, 0, 2, 0, 1}), precision).empty());
}

TEST_CASE("interlacing certification") {
  const auto rows = bona::bona_poly_list(12);
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(bona::check_interlacing(rows[static_cast<std::size_t>(n - 1)],
                                  rows[static_cast<std::size_t>(n - 2)]));
  }
  // Roots 1,4 vs root 10: the ladder breaks.
  const IntPolynomial p = ipoly({4, -5, 1});
  CHECK_FALSE(bona::check_interlacing(p, ipoly({-10, 1})));
  // Roots 1,4 vs root 2: proper interlacing.
  CHECK(bona::check_interlacing(p, ipoly({-2, 1})));
  // A complex-rooted top polynomial is rejected by value, not by error.
  CHECK_FALSE(bona::check_interlacing(ipoly({1, 0, 1}), ipoly({0, 1})));
  CHECK_THROWS_AS(bona::check_interlacing(p, ipoly({1, 1, 1})), bona::DomainError);
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadExt s8 = QuadExt::sqrt_of(BigRat(8));
  CHECK(s8.surd_part() == 2);
  CHECK(s8.radicand() == 2);
  CHECK((s8 * s8).is_rational());
  CHECK((s8 * s8).rational_part() == 8);
  CHECK(QuadExt::sqrt_of(BigRat(49, 4)).is_rational());
  CHECK(QuadExt::sqrt_of(BigRat(49, 4)).rational_part() == BigRat(7, 2));
  CHECK(QuadExt::sqrt_of(BigRat(0)).is_rational());
  CHECK_THROWS_AS(QuadExt::sqrt_of(BigRat(-1)), bona::DomainError);

  const QuadExt x = QuadExt(BigRat(1)) + s8;  // 1 + 2 sqrt(2)
  CHECK((x - x).sign() == 0);
  CHECK(x.sign() == 1);
  CHECK((-x).sign() == -1);
  CHECK((x * x).rational_part() == 9);
  CHECK((x * x).surd_part() == 4);
  CHECK((x / x) == QuadExt(BigInt(1)));
  CHECK(x.pow(0) == QuadExt(BigInt(1)));
  CHECK(x.pow(2) == x * x);
  CHECK(x.pow(3) == x * x * x);
  CHECK_THROWS_AS(x.pow(-1), bona::DomainError);
  CHECK_THROWS_AS(x / QuadExt(), bona::DomainError);
  // 1 - 2 sqrt(2) is negative although its rational part is positive.
  CHECK((QuadExt(BigRat(1)) - s8).sign() == -1);

  const QuadExt s3 = QuadExt::sqrt_of(BigRat(3));
  CHECK_THROWS_AS(s8 + s3, bona::DomainError);  // incompatible radicals
  CHECK(compare(s3, s8) < 0);                   // but ordering still works
  CHECK(compare(s8, s3) > 0);
  CHECK(compare(s8, QuadExt(BigInt(3))) < 0);
  CHECK(compare(QuadExt(BigInt(2)), s3) > 0);
  CHECK(s8 == QuadExt::sqrt_of(BigRat(2)) * QuadExt(BigInt(2)));
  CHECK(s8.str() == "0 + 2*sqrt(2)");
}

TEST_CASE("root split and root ratio") {
  CHECK_THROWS_AS(bona::quad_r1_r2(BigRat(0)), bona::DomainError);
  CHECK_THROWS_AS(bona::quad_r1_r2(BigRat(1)), bona::DomainError);

  const auto roots = bona::quad_r1_r2(BigRat(-1));
  // t^2 - 2 at u = -1: roots +-sqrt(2), ratio -1.
  CHECK((roots.r1 * roots.r2).rational_part() == -2);
  CHECK((roots.r1 + roots.r2).sign() == 0);
  CHECK(bona::q_of(BigRat(-1)) == QuadExt(BigRat(-1)));

  // u = -3/2 makes the discriminant the rational square 49/4.
  const QuadExt q = bona::q_of(BigRat(-3, 2));
  CHECK(q.is_rational());
  CHECK(q.rational_part() == BigRat(-4, 3));

  // Vieta at a generic point: sum -(1+u), product 2u.
  const BigRat u(-7, 3);
  const auto r = bona::quad_r1_r2(u);
  CHECK((r.r1 + r.r2).rational_part() == -(1 + u));
  CHECK((r.r1 * r.r2).rational_part() == 2 * u);
  CHECK(bona::q_of(u).sign() == -1);
}

TEST_CASE("root-ratio identity against the row polynomials") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(bona::check_bona_from_narayana(n, BigRat(-1)));
    CHECK(bona::check_bona_from_narayana(n, BigRat(-2)));
    CHECK(bona::check_bona_from_narayana(n, BigRat(-1, 3)));
    CHECK(bona::check_bona_from_narayana(n, BigRat(-3, 2)));  // rational branch
  }
  CHECK_THROWS_AS(bona::check_bona_from_narayana(0, BigRat(-1)), bona::DomainError);
  CHECK_THROWS_AS(bona::check_bona_from_narayana(3, BigRat(1)), bona::DomainError);
}

TEST_CASE("ratio monotonicity and discriminant floor") {
  const std::vector<BigRat> grid = {BigRat(-4), BigRat(-3), BigRat(-2),
                                    BigRat(-1), BigRat(-1, 2), BigRat(-1, 4)};
  CHECK(bona::check_q_monotone(grid));
  CHECK(bona::check_delta_at_least_one({BigRat(-4), BigRat(-1), BigRat(0)}));
  CHECK_FALSE(bona::check_delta_at_least_one({BigRat(1, 10)}));
  CHECK_THROWS_AS(bona::check_q_monotone({BigRat(-1)}), bona::DomainError);
  CHECK_THROWS_AS(bona::check_q_monotone({BigRat(-1), BigRat(-2)}),
                  bona::DomainError);
  CHECK_THROWS_AS(bona::check_q_monotone({BigRat(-1), BigRat(1)}),
                  bona::DomainError);
}
