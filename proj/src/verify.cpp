#include "bona/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "bona/bona_poly.hpp"
#include "bona/errors.hpp"
#include "bona/numbers.hpp"
#include "bona/permutation.hpp"
#include "bona/quadext.hpp"
#include "bona/sturm.hpp"
#include "bona/tree.hpp"

namespace bona {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(const Clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

// The two pattern sets whose stack-sort preimage tables reproduce the
// triangle rows.
const std::vector<std::string> kPatternSets = {"231,312", "132,312"};

std::string row_to_text(const std::vector<BigInt>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ",";
    out += to_decimal(row[i]);
  }
  return out;
}

}  // namespace

VerifyCaps VerifyCaps::clamped(int m) const {
  if (m < 1) throw DomainError("--max-n must be at least 1");
  VerifyCaps c = *this;
  c.methods_n_max = std::min(c.methods_n_max, m);
  c.enumeration_n_max = std::min(c.enumeration_n_max, m);
  c.permutation_n_max = std::min(c.permutation_n_max, m);
  c.injection_n_max = std::min(c.injection_n_max, m);
  c.real_rooted_n_max = std::min(c.real_rooted_n_max, m);
  c.interlacing_n_max = std::min(c.interlacing_n_max, m);
  c.recurrence_n_max = std::min(c.recurrence_n_max, m);
  c.narayana_recurrence_n_max = std::min(c.narayana_recurrence_n_max, m);
  c.bridge_n_max = std::min(c.bridge_n_max, m);
  c.log_concavity_n_max = std::min(c.log_concavity_n_max, m);
  return c;
}

CheckResult check_small_rows_four_ways(const VerifyCaps&) {
  const std::string name = "rows 1-5 agree across all four methods";
  const Clock::time_point start = Clock::now();
  const std::vector<std::vector<long long>> expected = {
      {1}, {1, 1}, {1, 4, 1}, {1, 9, 9, 1}, {1, 16, 38, 16, 1}};
  const Triangle conv = bona_convolution_table(5);
  const Triangle expl = bona_explicit_triangle(5);
  const Triangle series = BivariateSeries(5).triangle();
  const Triangle enumerated = enumeration_triangle(5);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      const BigInt want = expected[static_cast<std::size_t>(n - 1)]
                                  [static_cast<std::size_t>(k - 1)];
      for (const Triangle* t : {&conv, &expl, &series, &enumerated}) {
        if (t->at(n, k) != want) {
          return fail(name, "mismatch at (" + std::to_string(n) + "," +
                                std::to_string(k) + "): got " +
                                to_decimal(t->at(n, k)) + ", want " +
                                to_decimal(want));
        }
      }
    }
  }
  const long long elapsed = ms_since(start);
  if (elapsed >= 1000) {
    return fail(name, "correct values but took " + std::to_string(elapsed) +
                          " ms (budget 1000 ms)");
  }
  return pass(name, "15 entries x 4 methods in " + std::to_string(elapsed) + " ms");
}

CheckResult check_methods_agree(const VerifyCaps& caps) {
  const std::string name = "computation methods agree on full triangles";
  const int n_closed = caps.methods_n_max;
  const int n_enum = std::min(caps.enumeration_n_max, max_enumeration_vertices);
  const Triangle conv = bona_convolution_table(n_closed);
  const Triangle expl = bona_explicit_triangle(n_closed);
  const Triangle series = BivariateSeries(n_closed).triangle();
  if (expl != conv) return fail(name, "closed form vs convolution disagree");
  if (expl != series) return fail(name, "closed form vs series disagree");
  const Triangle enumer = enumeration_triangle(n_enum);
  for (int n = 1; n <= n_enum; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (enumer.at(n, k) != expl.at(n, k)) {
        return fail(name, "enumeration disagrees at (" + std::to_string(n) +
                              "," + std::to_string(k) + ")");
      }
    }
  }
  return pass(name, "closed forms to n=" + std::to_string(n_closed) +
                        ", enumeration to n=" + std::to_string(n_enum));
}

CheckResult check_square_column(const VerifyCaps& caps) {
  const std::string name = "second column is the sequence of squares";
  for (int n = 2; n <= caps.methods_n_max; ++n) {
    const BigInt want = BigInt(n - 1) * (n - 1);
    if (bona_explicit(n, 2) != want) {
      return fail(name, "entry (" + std::to_string(n) + ",2) is " +
                            to_decimal(bona_explicit(n, 2)) + ", not " +
                            to_decimal(want));
    }
  }
  return pass(name, "(n,2) = (n-1)^2 for n <= " + std::to_string(caps.methods_n_max));
}

CheckResult check_permutation_tables(const VerifyCaps& caps) {
  const std::string name = "stack-sort preimage tables match the triangle";
  const Triangle t = bona_explicit_triangle(std::max(caps.permutation_n_max, 1));
  for (const auto& set_text : kPatternSets) {
    const auto patterns = parse_pattern_set(set_text);
    for (int n = 1; n <= caps.permutation_n_max; ++n) {
      const DescentTable table = preimage_descent_table(n, patterns, caps.parallel);
      if (table.counts != t.row(n)) {
        return fail(name, "pattern set {" + set_text + "}, n=" +
                              std::to_string(n) + ": table " +
                              row_to_text(table.counts) + " vs row " +
                              row_to_text(t.row(n)));
      }
    }
  }
  return pass(name, "both pattern sets for n <= " +
                        std::to_string(caps.permutation_n_max));
}

CheckResult check_sorted_preimage_count(const VerifyCaps& caps) {
  const std::string name = "sorted stack-sort preimages are counted by catalan";
  for (int n = 1; n <= caps.permutation_n_max; ++n) {
    const BigInt got = count_sorted_preimages(n, caps.parallel);
    if (got != catalan(n)) {
      return fail(name, "n=" + std::to_string(n) + ": " + to_decimal(got) +
                            " preimages vs catalan " + to_decimal(catalan(n)));
    }
  }
  return pass(name, "n <= " + std::to_string(caps.permutation_n_max));
}

CheckResult check_symmetry(const VerifyCaps& caps) {
  const std::string name = "rows and descent tables are palindromic";
  const Triangle t = bona_explicit_triangle(caps.methods_n_max);
  for (int n = 1; n <= t.n_max(); ++n) {
    for (int k = 1; k <= n; ++k) {
      if (t.at(n, k) != t.at(n, n - k + 1)) {
        return fail(name, "row " + std::to_string(n) + " breaks at k=" +
                              std::to_string(k));
      }
    }
  }
  for (const auto& set_text : kPatternSets) {
    const auto patterns = parse_pattern_set(set_text);
    for (int n = 1; n <= caps.permutation_n_max; ++n) {
      if (!descent_table_symmetric(
              preimage_descent_table(n, patterns, caps.parallel))) {
        return fail(name, "descent table asymmetric for {" + set_text +
                              "}, n=" + std::to_string(n));
      }
    }
  }
  return pass(name, "rows to n=" + std::to_string(caps.methods_n_max) +
                        ", tables to n=" + std::to_string(caps.permutation_n_max));
}

CheckResult check_injection(const VerifyCaps& caps) {
  const std::string name = "prefix-flip injection embeds class (n,k) into (n,k+1)";
  const int n_max = std::min(caps.injection_n_max, max_enumeration_vertices);
  long long mapped = 0;
  for (int n = 1; n <= n_max; ++n) {
    // Bucket all trees by right-edge count r; the injection is defined
    // exactly on r <= (n-3)/2, i.e. k = r+1 <= (n-1)/2.
    std::map<int, std::vector<ZeroOneTree>> classes;
    for_each_tree(n, [&classes](const ZeroOneTree& t) {
      classes[stats(t).right_edges].push_back(t);
    });
    for (const auto& [r, members] : classes) {
      if (2 * r > n - 3) {
        // Outside the domain the operation must refuse.
        bool refused = false;
        try {
          injection_z(members.front());
        } catch (const DomainError&) {
          refused = true;
        }
        if (!refused) {
          return fail(name, "no rejection at n=" + std::to_string(n) +
                                ", right edges " + std::to_string(r));
        }
        continue;
      }
      std::set<std::string> images;
      for (const ZeroOneTree& t : members) {
        const ZeroOneTree image = injection_z(t);
        if (stats(image).right_edges != r + 1) {
          return fail(name, "image off target at n=" + std::to_string(n) +
                                ", tree " + to_string(t));
        }
        const auto back = injection_z_inverse(image);
        if (!back || !(*back == t)) {
          return fail(name, "inverse failed at n=" + std::to_string(n) +
                                ", tree " + to_string(t));
        }
        images.insert(to_string(image));
      }
      if (images.size() != members.size()) {
        return fail(name, "collision at n=" + std::to_string(n) +
                              ", right edges " + std::to_string(r));
      }
      mapped += static_cast<long long>(members.size());
    }
  }
  return pass(name, std::to_string(mapped) + " trees mapped injectively for n <= " +
                        std::to_string(n_max));
}

CheckResult check_real_rootedness(const VerifyCaps& caps) {
  const std::string name = "row polynomials are real-rooted with simple roots";
  const auto rows = bona_poly_list(caps.real_rooted_n_max);
  for (int n = 1; n <= caps.real_rooted_n_max; ++n) {
    const IntPolynomial& p = rows[static_cast<std::size_t>(n - 1)];
    if (!sturm_real_rooted_simple(p)) {
      return fail(name, "row " + std::to_string(n) + " has " +
                            std::to_string(sturm_real_root_count(p)) +
                            " distinct real roots, degree " +
                            std::to_string(p.degree()));
    }
  }
  return pass(name, "Sturm count equals degree for n <= " +
                        std::to_string(caps.real_rooted_n_max));
}

CheckResult check_interlacing_ladder(const VerifyCaps& caps) {
  const std::string name = "consecutive row polynomials interlace";
  const auto rows = bona_poly_list(caps.interlacing_n_max);
  for (int n = 3; n <= caps.interlacing_n_max; ++n) {
    try {
      if (!check_interlacing(rows[static_cast<std::size_t>(n - 1)],
                             rows[static_cast<std::size_t>(n - 2)])) {
        return fail(name, "ladder breaks between rows " + std::to_string(n) +
                              " and " + std::to_string(n - 1));
      }
    } catch (const InconclusiveError& e) {
      return fail(name, "UNDECIDED at n=" + std::to_string(n) + ": " + e.what());
    }
  }
  return pass(name, "certified for 3 <= n <= " +
                        std::to_string(caps.interlacing_n_max));
}

CheckResult check_recurrences(const VerifyCaps& caps) {
  const std::string name = "three-term recurrences hold with exact divisions";
  int bad = 0;
  if (!bona_poly_recurrence_check(caps.recurrence_n_max, &bad)) {
    return fail(name, "row recurrence fails first at n=" + std::to_string(bad));
  }
  if (!narayana_poly_recurrence_check(caps.narayana_recurrence_n_max, &bad)) {
    return fail(name, "narayana recurrence fails first at n=" + std::to_string(bad));
  }
  return pass(name, "rows to n=" + std::to_string(caps.recurrence_n_max) +
                        ", narayana to n=" +
                        std::to_string(caps.narayana_recurrence_n_max));
}

CheckResult check_root_ratio_bridge(const VerifyCaps& caps) {
  const std::string name = "root-ratio identity links the two polynomial families";
  const std::vector<std::string> us = {"-1/3", "-1/2", "-1", "-2", "-5"};
  for (int n = 1; n <= caps.bridge_n_max; ++n) {
    for (const auto& u_text : us) {
      const BigRat u = parse_rational(u_text);
      if (!check_bona_from_narayana(n, u)) {
        return fail(name, "identity fails at n=" + std::to_string(n) +
                              ", u=" + u_text);
      }
    }
  }
  if (compare(q_of(BigRat(-1)), QuadExt(BigRat(-1))) != 0) {
    return fail(name, "q(-1) is " + q_of(BigRat(-1)).str() + ", not -1");
  }
  const std::vector<BigRat> grid = {BigRat(-4), BigRat(-3), BigRat(-2),
                                    BigRat(-1), BigRat(-1, 2), BigRat(-1, 4)};
  if (!check_q_monotone(grid)) {
    return fail(name, "root ratio not strictly increasing and negative on the grid");
  }
  std::vector<BigRat> delta_grid = grid;
  delta_grid.push_back(BigRat(0));
  if (!check_delta_at_least_one(delta_grid)) {
    return fail(name, "discriminant drops below 1 on u <= 0");
  }
  return pass(name, "n <= " + std::to_string(caps.bridge_n_max) +
                        " at 5 rational points; ratio monotone on 6-point grid");
}

CheckResult check_log_concavity(const VerifyCaps& caps) {
  const std::string name = "rows and columns are log-concave";
  const int n_max = caps.log_concavity_n_max;
  const Triangle t = bona_explicit_triangle(n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      if (t.at(n, k) * t.at(n, k) < t.at(n, k - 1) * t.at(n, k + 1)) {
        return fail(name, "row log-concavity fails at (" + std::to_string(n) +
                              "," + std::to_string(k) + ")");
      }
    }
  }
  for (int k = 2; k <= n_max - 2; ++k) {
    for (int n = k + 2; n + 1 <= n_max; ++n) {
      if (t.at(n, k) * t.at(n, k) < t.at(n - 1, k) * t.at(n + 1, k)) {
        return fail(name, "column log-concavity fails at (" + std::to_string(n) +
                              "," + std::to_string(k) + ")");
      }
    }
  }
  for (int n = 4; n <= n_max; ++n) {
    for (int k = 2; 2 * k <= n + 1; ++k) {
      if (bona_binomial_form(n, k) != t.at(n, k)) {
        return fail(name, "binomial form disagrees at (" + std::to_string(n) +
                              "," + std::to_string(k) + ")");
      }
    }
  }
  return pass(name, "rows, columns and the binomial form to n=" +
                        std::to_string(n_max));
}

std::vector<CheckResult> verify_suite(const std::string& suite,
                                      const VerifyCaps& caps) {
  using Check = CheckResult (*)(const VerifyCaps&);
  const std::vector<Check> numbers = {check_small_rows_four_ways,
                                      check_methods_agree, check_square_column,
                                      check_symmetry, check_log_concavity};
  const std::vector<Check> trees = {check_injection};
  const std::vector<Check> polynomials = {
      check_real_rootedness, check_interlacing_ladder, check_recurrences,
      check_root_ratio_bridge};
  const std::vector<Check> permutations = {check_permutation_tables,
                                           check_sorted_preimage_count};

  std::vector<Check> selected;
  if (suite == "numbers") {
    selected = numbers;
  } else if (suite == "trees") {
    selected = trees;
  } else if (suite == "polynomials") {
    selected = polynomials;
  } else if (suite == "permutations") {
    selected = permutations;
  } else if (suite == "all") {
    selected = {check_small_rows_four_ways,
                check_methods_agree,
                check_square_column,
                check_permutation_tables,
                check_sorted_preimage_count,
                check_symmetry,
                check_injection,
                check_real_rootedness,
                check_interlacing_ladder,
                check_recurrences,
                check_root_ratio_bridge,
                check_log_concavity};
  } else {
    throw DomainError("unknown suite '" + suite +
                      "' (numbers, trees, polynomials, permutations, all)");
  }

  std::vector<CheckResult> results;
  results.reserve(selected.size());
  for (const Check check : selected) results.push_back(check(caps));
  return results;
}

}  // namespace bona
