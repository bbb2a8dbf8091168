#pragma once

#include <string>
#include <vector>

#include "bona/numbers.hpp"
#include "bona/permutation.hpp"
#include "bona/polynomial.hpp"
#include "bona/sturm.hpp"

namespace bona {

enum class Format { text, csv, json };

// Accepts "text", "csv", "json"; throws DomainError otherwise.
Format parse_format(const std::string& name);

// The BONA_FORMAT environment variable, falling back to text when unset.
Format default_format();

// Triangle renderings. Text: one comma-separated row per line. CSV:
// header "n,k,value" and one line per entry. JSON:
//   {"rows": [{"n": 1, "values": ["1"]}, ...]}
// with every number a decimal string so arbitrary precision survives.
std::string render_triangle(const Triangle& t, Format format);

// Descent table for one n. Text: the counts, comma separated. CSV: the
// same n,k,value layout as triangles. JSON carries the pattern set:
//   {"n": 3, "patterns": "231,312", "counts": ["1", "4", "1"]}
std::string render_descent_table(const DescentTable& table,
                                 const std::string& patterns, Format format);

// Polynomial renderings. Text is human algebra ("u + 4u^2 + u^3"); JSON
// is the bare coefficient array, constant term first: ["0","1","4","1"].
std::string render_polynomial(const IntPolynomial& p, Format format);

// Root report for one polynomial: isolating intervals plus the
// interlacing verdict against the previous row ("certified", "failed",
// "undecided", or "n/a" when there is no previous row to compare).
struct RootReport {
  int n = 0;
  BigRat precision;
  std::vector<RatInterval> intervals;
  std::string interlacing;
};

std::string render_root_report(const RootReport& report, Format format);

// Tree listings. Text: one canonical tree per line. JSON:
//   {"n": 2, "count": 2, "trees": ["(• _)", "(_ •)"]}
std::string render_tree_list(int n, const std::vector<std::string>& trees,
                             Format format);

}  // namespace bona
