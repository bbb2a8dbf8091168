#pragma once

#include <vector>

#include "bona/polynomial.hpp"

namespace bona {

// Closed interval with rational endpoints.
struct RatInterval {
  BigRat lo;
  BigRat hi;
};

// Sturm chain of p: primitive integer polynomials obtained from p, p' by
// repeated negated remainders. Every division step is scaled by positive
// rationals only, so the sign behavior of the classical chain is kept.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);  // p nonzero

// Sign variations of the chain at x, zeros dropped.
int sturm_variations(const std::vector<IntPolynomial>& chain, const BigRat& x);

// Number of distinct real roots of p (whole line, via the signs at +-inf).
int sturm_real_root_count(const IntPolynomial& p);  // p nonzero

// Number of distinct real roots of p in the closed interval [iv.lo, iv.hi].
// If p is not squarefree the endpoints must avoid its repeated roots.
int sturm_root_count_in(const IntPolynomial& p, const RatInterval& iv);

// True iff every root of p is real and simple (distinct-root count equals
// the degree). Requires a nonconstant p.
bool sturm_real_rooted_simple(const IntPolynomial& p);

// Every real root of p has absolute value strictly below this bound.
BigRat cauchy_bound(const IntPolynomial& p);  // p nonzero

// Pairwise-disjoint closed isolating intervals for the real roots of a
// squarefree p, in increasing order, one root strictly inside each, all
// endpoints non-roots, and every width <= precision. A repeated real root
// raises DomainError naming an interval that contains one.
std::vector<RatInterval> isolate_roots(const IntPolynomial& p,
                                       const BigRat& precision);

// Number of refinement rounds check_interlacing spends on one root pair
// before giving up with InconclusiveError.
inline constexpr int interlacing_refine_budget = 256;

// Decides whether the roots of q weakly interlace the roots of p, i.e.
// v_1 <= w_1 <= v_2 <= ... <= w_(n-1) <= v_n for the sorted roots v of p
// and w of q. Requires deg p = deg q + 1. Returns false when either
// polynomial fails to be real-rooted with simple roots or when the ladder
// breaks. Root-pair ties are certified exactly through a shared root of
// gcd(p, q); an undecided pair after the refinement budget raises
// InconclusiveError rather than guessing.
bool check_interlacing(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace bona
