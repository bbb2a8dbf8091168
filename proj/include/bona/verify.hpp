#pragma once

#include <string>
#include <vector>

namespace bona {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counts, bounds and timings, or the failure site
};

// Upper bounds for the individual checks. The defaults are the sizes the
// suite is promised to cover; smaller values give a quicker smoke run.
struct VerifyCaps {
  int methods_n_max = 30;       // closed-form method cross-checks
  int enumeration_n_max = 12;   // exhaustive tree comparisons
  int permutation_n_max = 9;    // full n! scans
  int injection_n_max = 10;     // exhaustive injection checks
  int real_rooted_n_max = 20;   // Sturm real-rootedness
  int interlacing_n_max = 20;   // root ladder certification
  int recurrence_n_max = 30;    // three-term recurrence replay
  int narayana_recurrence_n_max = 20;
  int bridge_n_max = 12;        // root-ratio identity
  int log_concavity_n_max = 30;
  bool parallel = false;        // parallel permutation scans

  // Clamps every bound to at most m (for the --max-n option).
  VerifyCaps clamped(int m) const;
};

// The twelve checks, in their fixed order.
CheckResult check_small_rows_four_ways(const VerifyCaps& caps);
CheckResult check_methods_agree(const VerifyCaps& caps);
CheckResult check_square_column(const VerifyCaps& caps);
CheckResult check_permutation_tables(const VerifyCaps& caps);
CheckResult check_sorted_preimage_count(const VerifyCaps& caps);
CheckResult check_symmetry(const VerifyCaps& caps);
CheckResult check_injection(const VerifyCaps& caps);
CheckResult check_real_rootedness(const VerifyCaps& caps);
CheckResult check_interlacing_ladder(const VerifyCaps& caps);
CheckResult check_recurrences(const VerifyCaps& caps);
CheckResult check_root_ratio_bridge(const VerifyCaps& caps);
CheckResult check_log_concavity(const VerifyCaps& caps);

// Named groups: "numbers", "trees", "polynomials", "permutations", "all".
// Throws DomainError for anything else.
std::vector<CheckResult> verify_suite(const std::string& suite,
                                      const VerifyCaps& caps);

}  // namespace bona
