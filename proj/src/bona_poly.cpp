#include "bona/bona_poly.hpp"

#include <string>

#include "bona/errors.hpp"
#include "bona/numbers.hpp"

namespace bona {

namespace {

// (2n-1)(1+u) p - (n-2)(u^2-6u+1) q, the common right-hand side of both
// three-term recurrences in this file.
IntPolynomial recurrence_rhs(int n, const IntPolynomial& p, const IntPolynomial& q) {
  const IntPolynomial one_plus_u({BigInt(1), BigInt(1)});
  const IntPolynomial quad({BigInt(1), BigInt(-6), BigInt(1)});
  return BigInt(2 * n - 1) * (one_plus_u * p) - BigInt(n - 2) * (quad * q);
}

}  // namespace

std::vector<IntPolynomial> bona_poly_list(int n_max) {
  if (n_max < 1) throw DomainError("bona_poly requires n >= 1");
  std::vector<IntPolynomial> out;
  out.reserve(static_cast<std::size_t>(n_max));
  out.push_back(IntPolynomial({BigInt(0), BigInt(1)}));  // u
  if (n_max >= 2) out.push_back(IntPolynomial({BigInt(0), BigInt(1), BigInt(1)}));
  for (int n = 3; n <= n_max; ++n) {
    const IntPolynomial rhs = recurrence_rhs(n, out[out.size() - 1], out[out.size() - 2]);
    out.push_back(divide_exact(rhs, BigInt(n + 1)));
  }
  return out;
}

IntPolynomial bona_poly(int n) { return bona_poly_list(n).back(); }

IntPolynomial narayana_poly(int n) {
  if (n < 1) throw DomainError("narayana_poly requires n >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (int j = 1; j <= n; ++j) {
    c[static_cast<std::size_t>(j)] = binomial(n, j) * binomial(n, j - 1);
  }
  return IntPolynomial(std::move(c));
}

bool narayana_poly_recurrence_check(int n_max, int* first_failing) {
  if (n_max < 3) throw DomainError("recurrence check needs n_max >= 3");
  // Unit-normalized rows: coefficient j of narayana_poly(n) is divisible
  // by n because it equals n times a Narayana number.
  const auto unit_row = [](int n) {
    return divide_exact(narayana_poly(n), BigInt(n));
  };
  IntPolynomial prev2 = unit_row(1);
  IntPolynomial prev = unit_row(2);
  for (int n = 3; n <= n_max; ++n) {
    const IntPolynomial cur = unit_row(n);
    const IntPolynomial quad({BigInt(1), BigInt(-2), BigInt(1)});  // (x-1)^2
    const IntPolynomial one_plus_x({BigInt(1), BigInt(1)});
    const IntPolynomial rhs =
        BigInt(2 * n - 1) * (one_plus_x * prev) - BigInt(n - 2) * (quad * prev2);
    if (BigInt(n + 1) * cur != rhs) {
      if (first_failing) *first_failing = n;
      return false;
    }
    prev2 = std::move(prev);
    prev = cur;
  }
  return true;
}

bool bona_poly_recurrence_check(int n_max, int* first_failing) {
  if (n_max < 3) throw DomainError("recurrence check needs n_max >= 3");
  // Rows recomputed from the closed form, so the check does not just
  // replay the recurrence that generated bona_poly.
  const Triangle t = bona_explicit_triangle(n_max);
  const auto row_poly = [&t](int n) {
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = t.at(n, k);
    return IntPolynomial(std::move(c));
  };
  IntPolynomial prev2 = row_poly(1);
  IntPolynomial prev = row_poly(2);
  for (int n = 3; n <= n_max; ++n) {
    const IntPolynomial cur = row_poly(n);
    if (BigInt(n + 1) * cur != recurrence_rhs(n, prev, prev2)) {
      if (first_failing) *first_failing = n;
      return false;
    }
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return true;
}

bool liu_wang_hypotheses_check(int n_max, std::string* detail) {
  if (n_max < 3) throw DomainError("hypotheses check needs n_max >= 3");
  const auto fail = [&detail](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  // c_n(u) = -((n-2)/(n+1))(u^2-6u+1) must be negative for all u <= 0:
  // there u(u-6) >= 0, so u^2-6u+1 >= 1 > 0, and the leading rational
  // factor is positive for every n >= 3. Nothing here depends on n_max,
  // but the degree/positivity ladder below does.
  const auto rows = bona_poly_list(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const IntPolynomial& p = rows[static_cast<std::size_t>(n - 1)];
    if (p.degree() != n) {
      return fail("degree of row " + std::to_string(n) + " is " +
                  std::to_string(p.degree()));
    }
    if (p.coeff(0) != 0) {
      return fail("row " + std::to_string(n) + " has a constant term");
    }
    for (int j = 1; j <= n; ++j) {
      if (p.coeff(j) <= 0) {
        return fail("row " + std::to_string(n) + " coefficient " +
                    std::to_string(j) + " is not positive");
      }
    }
  }
  return true;
}

}  // namespace bona
