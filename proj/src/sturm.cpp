#include "bona/sturm.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "bona/errors.hpp"

namespace bona {

namespace {

int sign_at(const IntPolynomial& p, const BigRat& x) {
  return sign(p.eval<BigRat>(x));
}

int sign_at_pos_inf(const IntPolynomial& p) {
  return p.is_zero() ? 0 : sign(p.leading());
}

int sign_at_neg_inf(const IntPolynomial& p) {
  if (p.is_zero()) return 0;
  const int lead = sign(p.leading());
  return p.degree() % 2 == 0 ? lead : -lead;
}

int count_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (const int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// p / gcd(p, p'): same distinct roots, all simple.
IntPolynomial squarefree_part(const IntPolynomial& p) {
  const IntPolynomial g = poly_gcd(p, p.derivative());
  if (g.degree() < 1) return primitive_part(p);
  return to_primitive_integer(divide_exact(to_rational(p), to_rational(g)));
}

// A split point inside (lo, hi) where p does not vanish. Tries the
// midpoint first, then steps around it; p has at most deg(p) roots, so
// some candidate works.
BigRat non_root_split(const IntPolynomial& p, const BigRat& lo, const BigRat& hi) {
  const BigRat mid = (lo + hi) / 2;
  if (sign_at(p, mid) != 0) return mid;
  BigRat step = (hi - lo) / 4;
  for (int t = 0; t <= p.degree() + 1; ++t) {
    for (const BigRat& cand : {BigRat(mid - step), BigRat(mid + step)}) {
      if (cand > lo && cand < hi && sign_at(p, cand) != 0) return cand;
    }
    step /= 2;
  }
  throw ExactnessError("no non-root split point found (cannot happen)");
}

struct HalfOpen {
  BigRat lo;  // exclusive, never a root
  BigRat hi;  // inclusive, never a root either (see cauchy_bound slack)
  int roots;
};

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  std::vector<IntPolynomial> chain;
  chain.push_back(primitive_part(p));
  if (p.degree() >= 1) chain.push_back(primitive_part(p.derivative()));
  while (chain.back().degree() >= 1) {
    const RatPolynomial r = remainder(to_rational(chain[chain.size() - 2]),
                                      to_rational(chain.back()));
    if (r.is_zero()) break;
    // to_primitive_integer scales by a positive rational, and the
    // negation supplies the Sturm sign flip.
    chain.push_back(BigInt(-1) * to_primitive_integer(r));
  }
  return chain;
}

int sturm_variations(const std::vector<IntPolynomial>& chain, const BigRat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at(p, x));
  return count_variations(signs);
}

int sturm_real_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  std::vector<int> at_neg, at_pos;
  for (const auto& q : chain) {
    at_neg.push_back(sign_at_neg_inf(q));
    at_pos.push_back(sign_at_pos_inf(q));
  }
  return count_variations(at_neg) - count_variations(at_pos);
}

int sturm_root_count_in(const IntPolynomial& p, const RatInterval& iv) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  if (iv.lo > iv.hi) throw DomainError("interval endpoints out of order");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  // Variations with zeros dropped equal the right-limit variations, so
  // V(lo) - V(hi) counts roots in (lo, hi]; a root at lo is added back.
  const int open = sturm_variations(chain, iv.lo) - sturm_variations(chain, iv.hi);
  return open + (sign_at(p, iv.lo) == 0 ? 1 : 0);
}

bool sturm_real_rooted_simple(const IntPolynomial& p) {
  if (p.degree() < 1) throw DomainError("real-rootedness needs a nonconstant polynomial");
  return sturm_real_root_count(p) == p.degree();
}

BigRat cauchy_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
  const BigInt lead = p.leading() < 0 ? BigInt(-p.leading()) : p.leading();
  BigRat max_ratio = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const BigInt c = p.coeff(i) < 0 ? BigInt(-p.coeff(i)) : p.coeff(i);
    const BigRat ratio = BigRat(c, lead);
    if (ratio > max_ratio) max_ratio = ratio;
  }
  // 1 + max would already do; the extra slack keeps the bound itself,
  // which becomes an interval endpoint, strictly clear of every root.
  return max_ratio + 2;
}

std::vector<RatInterval> isolate_roots(const IntPolynomial& p,
                                       const BigRat& precision) {
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  if (precision <= 0) throw DomainError("precision must be positive");
  if (p.degree() == 0) return {};

  const IntPolynomial g = poly_gcd(p, p.derivative());
  if (g.degree() >= 1 && sturm_real_root_count(g) > 0) {
    // Point at a repeated root to make the failure actionable.
    const auto witness = isolate_roots(squarefree_part(g), BigRat(1));
    std::string where = witness.empty()
                            ? std::string("(no witness interval)")
                            : "[" + to_decimal(witness.front().lo) + ", " +
                                  to_decimal(witness.front().hi) + "]";
    throw DomainError("polynomial has a repeated real root in " + where);
  }

  const auto chain = sturm_chain(p);
  const auto variations = [&chain](const BigRat& x) {
    return sturm_variations(chain, x);
  };

  const BigRat bound = cauchy_bound(p);
  std::deque<HalfOpen> work;
  {
    const int total = variations(-bound) - variations(bound);
    if (total > 0) work.push_back({-bound, bound, total});
  }

  std::vector<RatInterval> found;
  while (!work.empty()) {
    HalfOpen cur = work.front();
    work.pop_front();
    if (cur.roots == 0) continue;
    if (cur.roots == 1 && cur.hi - cur.lo <= precision) {
      found.push_back({cur.lo, cur.hi});
      continue;
    }
    const BigRat mid = non_root_split(p, cur.lo, cur.hi);
    const int left = variations(cur.lo) - variations(mid);
    if (left > 0) work.push_back({cur.lo, mid, left});
    if (cur.roots - left > 0) work.push_back({mid, cur.hi, cur.roots - left});
  }

  std::sort(found.begin(), found.end(),
            [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });

  // Neighbors may share an endpoint (both halves of one split). Shrink the
  // right interval until it clears the touch point; its root is strictly
  // above the shared endpoint, so this terminates.
  for (std::size_t i = 1; i < found.size(); ++i) {
    while (found[i].lo <= found[i - 1].hi) {
      const BigRat mid = non_root_split(p, found[i].lo, found[i].hi);
      if (variations(found[i].lo) - variations(mid) == 1) {
        found[i].hi = mid;
      } else {
        found[i].lo = mid;
      }
    }
  }
  return found;
}

namespace {

// Order of the single p-root in iv_p against the single q-root in iv_q:
// -1, 0, +1. Ties are certified via a root of g = gcd(p, q) trapped in
// the overlap; separations fall out of interval refinement.
int compare_isolated_roots(const IntPolynomial& p, RatInterval iv_p,
                           const IntPolynomial& q, RatInterval iv_q,
                           const IntPolynomial& g) {
  const auto chain_p = sturm_chain(p);
  const auto chain_q = sturm_chain(q);
  const auto refine = [](const IntPolynomial& poly,
                         const std::vector<IntPolynomial>& chain,
                         RatInterval& iv) {
    const BigRat mid = non_root_split(poly, iv.lo, iv.hi);
    if (sturm_variations(chain, iv.lo) - sturm_variations(chain, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  };
  for (int round = 0; round < interlacing_refine_budget; ++round) {
    if (iv_p.hi <= iv_q.lo) return -1;  // roots are strictly interior
    if (iv_q.hi <= iv_p.lo) return 1;
    const RatInterval overlap{std::max(iv_p.lo, iv_q.lo),
                              std::min(iv_p.hi, iv_q.hi)};
    if (!g.is_zero() && g.degree() >= 1 &&
        sturm_root_count_in(g, overlap) >= 1 &&
        sturm_root_count_in(p, overlap) == 1 &&
        sturm_root_count_in(q, overlap) == 1) {
      // The g-root in the overlap is a root of both p and q, and it is
      // the only root either has there, so the two roots coincide.
      return 0;
    }
    refine(p, chain_p, iv_p);
    refine(q, chain_q, iv_q);
  }
  throw InconclusiveError(
      "interlacing: root pair UNDECIDED after " +
      std::to_string(interlacing_refine_budget) + " refinement rounds ([" +
      to_decimal(iv_p.lo) + ", " + to_decimal(iv_p.hi) + "] vs [" +
      to_decimal(iv_q.lo) + ", " + to_decimal(iv_q.hi) + "])");
}

}  // namespace

bool check_interlacing(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.degree() < 1 || q.degree() < 0 || p.degree() != q.degree() + 1) {
    throw DomainError("interlacing needs deg p = deg q + 1 with p nonconstant");
  }
  if (!sturm_real_rooted_simple(p)) return false;
  if (q.degree() >= 1 && !sturm_real_rooted_simple(q)) return false;
  const auto v = isolate_roots(p, BigRat(1));
  const auto w = isolate_roots(q, BigRat(1));
  const IntPolynomial g = poly_gcd(p, q);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (compare_isolated_roots(p, v[i], q, w[i], g) > 0) return false;
    if (compare_isolated_roots(q, w[i], p, v[i + 1], g) > 0) return false;
  }
  return true;
}

}  // namespace bona
