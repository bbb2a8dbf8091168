#pragma once

#include <string>
#include <vector>

#include "bona/polynomial.hpp"

namespace bona {

// The row polynomial P_n(u) = sum_k bona(n, k) u^k (degree n, zero
// constant term), generated by the three-term recurrence
//   (n+1) P_n = (2n-1)(1+u) P_{n-1} - (n-2)(u^2-6u+1) P_{n-2}
// from P_1 = u and P_2 = u + u^2. Every division by n+1 is checked exact.
IntPolynomial bona_poly(int n);  // requires n >= 1

// P_1 .. P_n in one pass (the recurrence is a single chain).
std::vector<IntPolynomial> bona_poly_list(int n_max);

// The scaled Narayana polynomial N_n(q) = sum_{j=1}^{n} C(n,j) C(n,j-1) q^j.
// Its coefficients are n times the Narayana numbers.
IntPolynomial narayana_poly(int n);  // requires n >= 1

// Verifies the classical Narayana three-term recurrence
//   (n+1) A_n = (2n-1)(1+x) A_{n-1} - (n-2)(x-1)^2 A_{n-2}
// exactly for 3 <= n <= n_max, where A_n = narayana_poly(n)/n is the
// unit-normalized row (the recurrence does not survive the extra factor
// of n; the divisions by n are checked exact). A false return stores the
// first failing n in *first_failing when given.
bool narayana_poly_recurrence_check(int n_max, int* first_failing = nullptr);

// Same shape of check for the bona_poly recurrence itself, recomputing
// each row from scratch via the explicit formula so the two sides are
// independent.
bool bona_poly_recurrence_check(int n_max, int* first_failing = nullptr);

// Hypotheses of the Liu-Wang real-rootedness transfer theorem for the
// family P_n = a_n(u) P_{n-1} + c_n(u) P_{n-2}:
// checks, for 3 <= n <= n_max, that the degree ladder deg P_n = n holds,
// that all coefficients of P_n are positive in degrees 1..n, and that
// c_n(u) = -((n-2)/(n+1))(u^2-6u+1) is strictly negative on u <= 0
// (certified by u^2-6u+1 >= 1 there, since u(u-6) >= 0).
bool liu_wang_hypotheses_check(int n_max, std::string* detail = nullptr);

}  // namespace bona
