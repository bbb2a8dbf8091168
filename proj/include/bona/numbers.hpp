#pragma once

#include <vector>

#include "bona/bigint.hpp"

namespace bona {

// Exact binomial coefficient; 0 whenever k < 0, n < 0 or k > n.
BigInt binomial(long long n, long long k);

// Triangle of values indexed 1-based in both coordinates: at(n, k) is the
// number of 0-1 trees on n vertices with exactly k-1 right edges. Row n
// has n entries.
class Triangle {
 public:
  explicit Triangle(std::vector<std::vector<BigInt>> rows);

  int n_max() const { return static_cast<int>(rows_.size()); }
  const BigInt& at(int n, int k) const;  // throws DomainError out of range
  const std::vector<BigInt>& row(int n) const;
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

  friend bool operator==(const Triangle& a, const Triangle& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator!=(const Triangle& a, const Triangle& b) {
    return !(a == b);
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// Closed-form count of 0-1 trees on n vertices with k-1 right edges,
// via the coefficient-extraction formula
//   (1/n) C(n,k-1) sum_j 2^j C(k-1,j) C(n-k+1,j+1)
// applied on the small-k half and reflected through k <-> n-k+1 otherwise
// (the triangle rows are palindromic). The division by n is checked exact.
BigInt bona_explicit(int n, int k);  // requires 1 <= k <= n

Triangle bona_explicit_triangle(int n_max);

// Same triangle built from the root decomposition: a tree on n vertices is
// a root with a left-only child subtree, a right-only child subtree (one
// extra right edge), or two labeled child subtrees (label 0/1 doubles the
// count, and the root contributes one right edge). No closed form is used.
Triangle bona_convolution_table(int n_max);

// Same number as a short combination of binomial coefficients in n:
//   sum_{m=k-1}^{2k-2} c_m C(n-1, m),  c_{k-1+j} = 2^j C(k-1,j) C(k+j-1,k-2)/(k-1).
// Only defined for 2 <= k <= (n+1)/2; throws DomainError outside that.
BigInt bona_binomial_form(int n, int k);

// Row sums of the triangle: the number of 0-1 trees on n vertices.
// Computed two independent ways (convolution row sum and the closed-form
// generating function) and cross-checked; disagreement throws.
BigInt boolean_catalan(int n);  // requires n >= 1

// boolean_catalan(1..order) from the generating function
//   (1 - 2z - sqrt(1 - 4z - 4z^2)) / (4z),
// with the square root expanded by exact rational bootstrapping.
std::vector<BigInt> boolean_catalan_series(int order);

// Truncation of the bivariate generating function T(z, u) satisfying
//   T = z (1 + uT + T + 2uT^2),
// computed by fixed-point iteration. coeff(n, k) is the coefficient of
// z^n u^k, i.e. the number of 0-1 trees on n vertices with k right edges.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);

  int order() const { return order_; }
  const BigInt& coeff(int n, int k) const;  // 0 outside 1<=n<=order, 0<=k<n

  Triangle triangle() const;

 private:
  int order_;
  std::vector<std::vector<BigInt>> c_;  // c_[n-1][k] = [z^n u^k] T
  BigInt zero_;
};

// Narayana number (1/n) C(n,k) C(n,k-1), the number of binary plane trees
// on n vertices with k-1 right edges; requires 1 <= k <= n. Division by n
// is checked exact.
BigInt narayana(int n, int k);

// Catalan number C(2n,n)/(n+1); requires n >= 0. Division checked exact.
BigInt catalan(int n);

}  // namespace bona
