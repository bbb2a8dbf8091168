#include "bona/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <thread>
#include <utility>

#include "bona/errors.hpp"

namespace bona {

namespace {

void sort_range(const std::vector<int>& in, int lo, int hi, std::vector<int>& out) {
  if (lo >= hi) return;
  int max_at = lo;
  for (int i = lo + 1; i < hi; ++i) {
    if (in[static_cast<std::size_t>(i)] > in[static_cast<std::size_t>(max_at)]) max_at = i;
  }
  sort_range(in, lo, max_at, out);
  sort_range(in, max_at + 1, hi, out);
  out.push_back(in[static_cast<std::size_t>(max_at)]);
}

bool matches_from(const std::vector<int>& p, const std::vector<int>& pat,
                  std::vector<int>& chosen, std::size_t next) {
  if (chosen.size() == pat.size()) return true;
  const std::size_t need = pat.size() - chosen.size();
  for (std::size_t i = next; i + need <= p.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      const bool pat_less = pat[j] < pat[chosen.size()];
      const bool val_less = p[static_cast<std::size_t>(chosen[j])] < p[i];
      if (pat_less != val_less) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(static_cast<int>(i));
    if (matches_from(p, pat, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

void check_scan_size(int n) {
  if (n < 1) throw DomainError("permutation scans need n >= 1");
  if (n > max_exhaustive_length) {
    throw SizeError("exhaustive permutation scan is capped at " +
                    std::to_string(max_exhaustive_length) + ", got " +
                    std::to_string(n));
  }
}

// Runs fn over every permutation of 1..n. With `parallel`, permutations
// are partitioned by their first entry; each worker owns one accumulator
// slot, and the caller merges in first-entry order so results never
// depend on scheduling.
template <typename PerPermutation>
void scan_permutations(int n, bool parallel, const PerPermutation& fn) {
  if (!parallel || n < 3) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      fn(perm, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(n));
  for (int first = 1; first <= n; ++first) {
    workers.emplace_back([n, first, &fn]() {
      std::vector<int> perm;
      perm.reserve(static_cast<std::size_t>(n));
      perm.push_back(first);
      for (int v = 1; v <= n; ++v) {
        if (v != first) perm.push_back(v);
      }
      // The tail starts sorted, so next_permutation walks every
      // arrangement with this fixed head.
      do {
        fn(perm, static_cast<std::size_t>(first - 1));
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1) throw DomainError("permutation entries must be positive");
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw DomainError("permutation entries must be distinct");
    }
  }
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) throw DomainError("empty permutation");
  std::vector<int> entries;
  if (text.find(',') == std::string::npos) {
    for (const char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
        throw DomainError("compact permutation form allows digits 1..9, got '" +
                          text + "'");
      }
      entries.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = text.find(',', start);
      const std::string tok =
          text.substr(start, comma == std::string::npos ? std::string::npos
                                                        : comma - start);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw DomainError("bad permutation entry '" + tok + "' in '" + text + "'");
      }
      entries.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw DomainError("identity needs n >= 0");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

bool Permutation::is_full() const {
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation stack_sort(const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.entries().size());
  sort_range(p.entries(), 0, p.size(), out);
  return Permutation(std::move(out));
}

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() == 0) return true;
  if (pattern.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.entries().size());
  return matches_from(p.entries(), pattern.entries(), chosen, 0);
}

bool avoids_all(const Permutation& p, const std::vector<Permutation>& patterns) {
  for (const auto& pat : patterns) {
    if (contains_pattern(p, pat)) return false;
  }
  return true;
}

int descents(const Permutation& p) {
  int count = 0;
  for (std::size_t i = 1; i < p.entries().size(); ++i) {
    if (p.entries()[i - 1] > p.entries()[i]) ++count;
  }
  return count;
}

std::vector<Permutation> parse_pattern_set(const std::string& text) {
  // Pattern sets separate patterns by commas, so the compact digit form
  // is required here; "231,312" is two length-3 patterns.
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (tok.empty()) throw DomainError("empty pattern in '" + text + "'");
    Permutation pat = Permutation::parse(tok);
    if (!pat.is_full()) {
      throw DomainError("pattern '" + tok + "' is not a permutation of 1..k");
    }
    out.push_back(std::move(pat));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw DomainError("empty pattern set");
  return out;
}

BigInt DescentTable::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

DescentTable preimage_descent_table(int n, const std::vector<Permutation>& patterns,
                                    bool parallel) {
  check_scan_size(n);
  std::vector<std::vector<BigInt>> partial(
      static_cast<std::size_t>(n),
      std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
  scan_permutations(n, parallel, [&patterns, &partial](const std::vector<int>& perm,
                                                       std::size_t slot) {
    const Permutation p{std::vector<int>(perm)};
    if (!avoids_all(stack_sort(p), patterns)) return;
    ++partial[slot][static_cast<std::size_t>(descents(p))];
  });
  DescentTable table;
  table.n = n;
  table.counts.assign(static_cast<std::size_t>(n), BigInt(0));
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < part.size(); ++k) table.counts[k] += part[k];
  }
  return table;
}

bool descent_table_symmetric(const DescentTable& table) {
  const std::size_t m = table.counts.size();
  for (std::size_t k = 0; k < m / 2; ++k) {
    if (table.counts[k] != table.counts[m - 1 - k]) return false;
  }
  return true;
}

BigInt count_sorted_preimages(int n, bool parallel) {
  check_scan_size(n);
  std::vector<BigInt> partial(static_cast<std::size_t>(n), BigInt(0));
  scan_permutations(n, parallel, [&partial](const std::vector<int>& perm,
                                            std::size_t slot) {
    const Permutation image = stack_sort(Permutation{std::vector<int>(perm)});
    if (std::is_sorted(image.entries().begin(), image.entries().end())) {
      ++partial[slot];
    }
  });
  BigInt total = 0;
  for (const auto& part : partial) total += part;
  return total;
}

}  // namespace bona
