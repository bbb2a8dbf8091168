#pragma once

#include <string>
#include <vector>

#include "bona/bigint.hpp"

namespace bona {

// A sequence of pairwise-distinct positive integers. A "full" permutation
// contains exactly 1..n; patterns like 231 are permutations too.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);  // validates distinctness

  // Accepts the compact one-line form "231" (digits 1..9) or the
  // comma-separated form "3,1,4,2" needed once entries exceed 9.
  static Permutation parse(const std::string& text);

  static Permutation identity(int n);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool is_full() const;  // entries are a rearrangement of 1..n

  std::string str() const;  // comma-separated

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

 private:
  std::vector<int> entries_;
};

// One pass of the classic stack-sorting map, defined by the recursion
// s(L n R) = s(L) s(R) n around the maximum entry.
Permutation stack_sort(const Permutation& p);

// Whether p contains a subsequence order-isomorphic to the pattern.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

bool avoids_all(const Permutation& p, const std::vector<Permutation>& patterns);

// Number of positions i with p(i) > p(i+1).
int descents(const Permutation& p);

// Parses a comma-separated pattern list such as "231,312".
std::vector<Permutation> parse_pattern_set(const std::string& text);

// Exhaustive scans walk all n! permutations; this cap keeps them to a
// few seconds.
inline constexpr int max_exhaustive_length = 10;

// counts[k-1] = number of permutations p of 1..n whose stack-sorted image
// avoids every given pattern and which have exactly k-1 descents.
struct DescentTable {
  int n = 0;
  std::vector<BigInt> counts;

  BigInt total() const;
};

// Scans all n! preimages; `parallel` splits the scan by first entry
// across hardware threads with a deterministic merge. Throws SizeError
// above max_exhaustive_length.
DescentTable preimage_descent_table(int n, const std::vector<Permutation>& patterns,
                                    bool parallel = false);

// True iff the table reads the same forwards and backwards.
bool descent_table_symmetric(const DescentTable& table);

// Number of permutations of 1..n whose stack-sorted image is the identity
// (i.e. avoids the pattern 21). Same cap and parallel option as above.
BigInt count_sorted_preimages(int n, bool parallel = false);

}  // namespace bona
