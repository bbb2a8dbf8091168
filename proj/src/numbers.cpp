#include "bona/numbers.hpp"

#include <utility>

#include "bona/errors.hpp"

namespace bona {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i) here
  }
  return r;
}

Triangle::Triangle(std::vector<std::vector<BigInt>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != i + 1) {
      throw DomainError("triangle row " + std::to_string(i + 1) +
                        " must have " + std::to_string(i + 1) + " entries");
    }
  }
}

const BigInt& Triangle::at(int n, int k) const {
  if (n < 1 || n > n_max() || k < 1 || k > n) {
    throw DomainError("triangle index (" + std::to_string(n) + ", " +
                      std::to_string(k) + ") out of range");
  }
  return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
}

const std::vector<BigInt>& Triangle::row(int n) const {
  if (n < 1 || n > n_max()) {
    throw DomainError("triangle row " + std::to_string(n) + " out of range");
  }
  return rows_[static_cast<std::size_t>(n - 1)];
}

BigInt bona_explicit(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("bona_explicit requires 1 <= k <= n, got n=" +
                      std::to_string(n) + " k=" + std::to_string(k));
  }
  // The triangle is palindromic; the formula below is stated for the
  // small-k half, so reflect the large-k half onto it.
  if (2 * k > n + 1) k = n - k + 1;
  BigInt sum = 0;
  for (int j = 0; j <= k - 1; ++j) {
    sum += (BigInt(1) << j) * binomial(k - 1, j) * binomial(n - k + 1, j + 1);
  }
  return divide_exact(binomial(n, k - 1) * sum, BigInt(n));
}

Triangle bona_explicit_triangle(int n_max) {
  if (n_max < 1) throw DomainError("triangle needs n_max >= 1");
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    auto& row = rows[static_cast<std::size_t>(n - 1)];
    row.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      row[static_cast<std::size_t>(k - 1)] = bona_explicit(n, k);
    }
  }
  return Triangle(std::move(rows));
}

Triangle bona_convolution_table(int n_max) {
  if (n_max < 1) throw DomainError("triangle needs n_max >= 1");
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n_max));
  rows[0] = {BigInt(1)};
  // at(n, k) with out-of-range k treated as 0; rows below n are complete.
  const auto at = [&rows](int n, int k) -> BigInt {
    if (k < 1 || k > n) return 0;
    return rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
  };
  for (int n = 2; n <= n_max; ++n) {
    auto& row = rows[static_cast<std::size_t>(n - 1)];
    row.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      // Root with a single child: a left child keeps every right edge of
      // the subtree, a right child adds one.
      BigInt v = at(n - 1, k) + at(n - 1, k - 1);
      // Root with two children carrying a 0/1 label (factor 2): the left
      // subtree has i-1 vertices and j-1 right edges, the right subtree
      // has n-i vertices, and the edge to the right child adds one more,
      // so the right subtree must carry (k-1)-(j-1)-1 = k-j-1 of them.
      for (int i = 2; i <= n - 1; ++i) {
        for (int j = 1; j <= i - 1 && j <= k - 1; ++j) {
          v += 2 * at(i - 1, j) * at(n - i, k - j);
        }
      }
      row[static_cast<std::size_t>(k - 1)] = std::move(v);
    }
  }
  return Triangle(std::move(rows));
}

BigInt bona_binomial_form(int n, int k) {
  if (k < 2) {
    throw DomainError("bona_binomial_form requires k >= 2 (use bona_explicit)");
  }
  if (2 * k > n + 1) {
    throw DomainError("bona_binomial_form requires k <= (n+1)/2, got n=" +
                      std::to_string(n) + " k=" + std::to_string(k));
  }
  BigInt total = 0;
  for (int j = 0; j <= k - 1; ++j) {
    const BigInt c = divide_exact(
        (BigInt(1) << j) * binomial(k - 1, j) * binomial(k + j - 1, k - 2),
        BigInt(k - 1));
    total += c * binomial(n - 1, (k - 1) + j);
  }
  return total;
}

std::vector<BigInt> boolean_catalan_series(int order) {
  if (order < 1) throw DomainError("series order must be >= 1");
  // s = sqrt(1 - 4z - 4z^2) as a power series: s_0 = 1 and the remaining
  // coefficients bootstrap from s*s = 1 - 4z - 4z^2.
  const int m_max = order + 1;
  std::vector<BigRat> s(static_cast<std::size_t>(m_max) + 1, BigRat(0));
  s[0] = 1;
  const auto rhs = [](int m) -> BigRat {
    if (m == 0) return BigRat(1);
    if (m == 1 || m == 2) return BigRat(-4);
    return BigRat(0);
  };
  for (int m = 1; m <= m_max; ++m) {
    BigRat conv = 0;
    for (int i = 1; i <= m - 1; ++i) {
      conv += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(m - i)];
    }
    s[static_cast<std::size_t>(m)] = (rhs(m) - conv) / 2;
  }
  // B-series = (1 - 2z - s) / (4z). For n >= 1 the z^(n+1) coefficient of
  // the numerator is just -s_(n+1); the 1 and -2z terms only cancel the
  // constant and linear coefficients.
  std::vector<BigInt> out(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) {
    out[static_cast<std::size_t>(n - 1)] =
        rational_to_integer(-s[static_cast<std::size_t>(n + 1)] / 4);
  }
  return out;
}

BigInt boolean_catalan(int n) {
  if (n < 1) throw DomainError("boolean_catalan requires n >= 1");
  const Triangle t = bona_convolution_table(n);
  BigInt row_sum = 0;
  for (const auto& v : t.row(n)) row_sum += v;
  const BigInt from_series = boolean_catalan_series(n).back();
  if (row_sum != from_series) {
    throw ExactnessError("boolean_catalan cross-check failed at n=" +
                         std::to_string(n) + ": row sum " + row_sum.str() +
                         " vs series " + from_series.str());
  }
  return row_sum;
}

BivariateSeries::BivariateSeries(int order) : order_(order), zero_(0) {
  if (order < 1) throw DomainError("series order must be >= 1");
  // T lives in Z[u][[z]]; iterate T <- z(1 + (1+u)T + 2uT^2) truncated at
  // z^order. After m iterations the coefficients up to z^m are fixed, so
  // `order` rounds suffice.
  using UPoly = std::vector<BigInt>;  // coefficients in u
  std::vector<UPoly> t(static_cast<std::size_t>(order) + 1);  // t[i] = [z^i] T
  const auto add_scaled = [](UPoly& dst, const UPoly& src, int shift, int factor) {
    if (dst.size() < src.size() + static_cast<std::size_t>(shift)) {
      dst.resize(src.size() + static_cast<std::size_t>(shift));
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i + static_cast<std::size_t>(shift)] += factor * src[i];
    }
  };
  for (int round = 0; round < order; ++round) {
    std::vector<UPoly> next(static_cast<std::size_t>(order) + 1);
    next[1] = {BigInt(1)};  // the z * 1 term
    for (int i = 1; i < order; ++i) {
      // z * (1 + u) * T
      add_scaled(next[static_cast<std::size_t>(i + 1)], t[static_cast<std::size_t>(i)], 0, 1);
      add_scaled(next[static_cast<std::size_t>(i + 1)], t[static_cast<std::size_t>(i)], 1, 1);
    }
    for (int i = 1; i < order; ++i) {
      for (int j = 1; i + j < order; ++j) {
        // z * 2u * T^2
        const UPoly& a = t[static_cast<std::size_t>(i)];
        const UPoly& b = t[static_cast<std::size_t>(j)];
        if (a.empty() || b.empty()) continue;
        UPoly prod(a.size() + b.size() - 1);
        for (std::size_t p = 0; p < a.size(); ++p) {
          for (std::size_t q = 0; q < b.size(); ++q) prod[p + q] += a[p] * b[q];
        }
        add_scaled(next[static_cast<std::size_t>(i + j + 1)], prod, 1, 2);
      }
    }
    t = std::move(next);
  }
  c_.resize(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) {
    auto& row = c_[static_cast<std::size_t>(n - 1)];
    row.assign(static_cast<std::size_t>(n), BigInt(0));
    const UPoly& src = t[static_cast<std::size_t>(n)];
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (static_cast<int>(k) >= n && src[k] != 0) {
        throw ExactnessError("series coefficient above the diagonal at n=" +
                             std::to_string(n));
      }
      if (static_cast<int>(k) < n) row[k] = src[k];
    }
  }
}

const BigInt& BivariateSeries::coeff(int n, int k) const {
  if (n < 1 || n > order_ || k < 0 || k >= n) return zero_;
  return c_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
}

Triangle BivariateSeries::triangle() const {
  return Triangle(c_);
}

BigInt narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("narayana requires 1 <= k <= n, got n=" +
                      std::to_string(n) + " k=" + std::to_string(k));
  }
  return divide_exact(binomial(n, k) * binomial(n, k - 1), BigInt(n));
}

BigInt catalan(int n) {
  if (n < 0) throw DomainError("catalan requires n >= 0");
  return divide_exact(binomial(2LL * n, n), BigInt(n + 1));
}

}  // namespace bona
