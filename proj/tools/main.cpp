#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bona/bona_poly.hpp"
#include "bona/errors.hpp"
#include "bona/io.hpp"
#include "bona/numbers.hpp"
#include "bona/permutation.hpp"
#include "bona/quadext.hpp"
#include "bona/sturm.hpp"
#include "bona/tree.hpp"
#include "bona/verify.hpp"

namespace {

// Data goes to stdout or, when --out is given, to that file; diagnostics
// always go to stderr.
void emit(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw bona::Error("cannot open '" + out_path + "' for writing");
  out << data;
  if (!out.good()) throw bona::Error("short write to '" + out_path + "'");
}

bona::Format resolve_format(const std::string& flag) {
  return flag.empty() ? bona::default_format() : bona::parse_format(flag);
}

struct TableArgs {
  int n_max = 0;
  std::string method = "explicit";
  std::string format;
  std::string out;
};

void run_table(const TableArgs& a) {
  bona::Triangle t = [&a]() {
    if (a.method == "explicit") return bona::bona_explicit_triangle(a.n_max);
    if (a.method == "convolution") return bona::bona_convolution_table(a.n_max);
    if (a.method == "series") return bona::BivariateSeries(a.n_max).triangle();
    if (a.method == "enumerate") return bona::enumeration_triangle(a.n_max);
    throw bona::DomainError("unknown method '" + a.method + "'");
  }();
  emit(bona::render_triangle(t, resolve_format(a.format)), a.out);
}

struct PolyArgs {
  int n = 0;
  std::string format;
  std::string out;
};

void run_poly(const PolyArgs& a) {
  emit(bona::render_polynomial(bona::bona_poly(a.n), resolve_format(a.format)),
       a.out);
}

struct RootsArgs {
  int n = 0;
  std::string precision = "1/1024";
  std::string format;
  std::string out;
};

void run_roots(const RootsArgs& a) {
  const bona::BigRat precision = bona::parse_rational(a.precision);
  bona::RootReport report;
  report.n = a.n;
  report.precision = precision;
  report.intervals = bona::isolate_roots(bona::bona_poly(a.n), precision);
  if (a.n >= 3) {
    try {
      report.interlacing = bona::check_interlacing(bona::bona_poly(a.n),
                                                   bona::bona_poly(a.n - 1))
                               ? "certified"
                               : "failed";
    } catch (const bona::InconclusiveError&) {
      report.interlacing = "undecided";
    }
  } else {
    report.interlacing = "n/a";
  }
  emit(bona::render_root_report(report, resolve_format(a.format)), a.out);
}

struct PermsArgs {
  int n = 0;
  std::string avoid = "231,312";
  bool parallel = false;
  std::string format;
  std::string out;
};

void run_perms(const PermsArgs& a) {
  const auto patterns = bona::parse_pattern_set(a.avoid);
  const bona::DescentTable table =
      bona::preimage_descent_table(a.n, patterns, a.parallel);
  emit(bona::render_descent_table(table, a.avoid, resolve_format(a.format)),
       a.out);
}

struct TreesArgs {
  int n = 0;
  std::string format;
  std::string out;
};

void run_trees(const TreesArgs& a) {
  std::vector<std::string> lines;
  bona::for_each_tree(a.n, [&lines](const bona::ZeroOneTree& t) {
    lines.push_back(bona::to_string(t));
  });
  emit(bona::render_tree_list(a.n, lines, resolve_format(a.format)), a.out);
}

struct InjectArgs {
  int n = 0;
  int k = 0;
  std::string format;
  std::string out;
};

void run_inject(const InjectArgs& a) {
  if (a.k < 1 || 2 * a.k > a.n - 1) {
    throw bona::DomainError("--k must satisfy 1 <= k <= (n-1)/2");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  bona::for_each_tree(a.n, [&pairs, &a](const bona::ZeroOneTree& t) {
    if (bona::stats(t).right_edges != a.k - 1) return;
    pairs.emplace_back(bona::to_string(t),
                       bona::to_string(bona::injection_z(t)));
  });
  const bona::Format format = resolve_format(a.format);
  if (format == bona::Format::json) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [from, to] : pairs) {
      list.push_back(nlohmann::ordered_json{{"tree", from}, {"image", to}});
    }
    nlohmann::ordered_json doc{
        {"n", a.n}, {"k", a.k}, {"count", pairs.size()}, {"pairs", list}};
    emit(doc.dump(2) + "\n", a.out);
  } else if (format == bona::Format::text) {
    std::string out;
    for (const auto& [from, to] : pairs) out += from + " -> " + to + "\n";
    emit(out, a.out);
  } else {
    throw bona::DomainError("injection listings have no csv form (use text or json)");
  }
}

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 0;
  bool parallel = false;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  bona::VerifyCaps caps;
  caps.parallel = a.parallel;
  if (a.max_n > 0) caps = caps.clamped(a.max_n);
  const auto results = bona::verify_suite(a.suite, caps);
  bool all_pass = true;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cerr << " (" << r.detail << ")";
    std::cerr << "\n";
    checks.push_back(nlohmann::ordered_json{
        {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  nlohmann::ordered_json doc{
      {"suite", a.suite}, {"checks", checks}, {"pass", all_pass}};
  emit(doc.dump(2) + "\n", a.out);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for labeled binary trees: triangles of "
               "counts, row polynomials and their roots, stack-sort "
               "preimage tables, and a self-verification suite."};
  app.require_subcommand(1);

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table", "Print the triangle of counts up to a row limit");
  table->add_option("--n-max", table_args.n_max, "Largest row to compute")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--method", table_args.method,
                    "explicit, convolution, series or enumerate")
      ->check(CLI::IsMember({"explicit", "convolution", "series", "enumerate"}));
  table->add_option("--format", table_args.format, "text, csv or json");
  table->add_option("--out", table_args.out, "Write data to a file instead of stdout");

  PolyArgs poly_args;
  CLI::App* poly = app.add_subcommand("poly", "Print one row polynomial");
  poly->add_option("--n", poly_args.n, "Row index")->required()->check(CLI::PositiveNumber);
  poly->add_option("--format", poly_args.format, "text or json");
  poly->add_option("--out", poly_args.out, "Write data to a file instead of stdout");

  RootsArgs roots_args;
  CLI::App* roots = app.add_subcommand(
      "roots", "Isolate the real roots of a row polynomial");
  roots->add_option("--n", roots_args.n, "Row index")->required()->check(CLI::PositiveNumber);
  roots->add_option("--precision", roots_args.precision,
                    "Interval width bound as a rational, e.g. 1/1024");
  roots->add_option("--format", roots_args.format, "text or json");
  roots->add_option("--out", roots_args.out, "Write data to a file instead of stdout");

  PermsArgs perms_args;
  CLI::App* perms = app.add_subcommand(
      "perms", "Descent table of stack-sort preimages filtered by pattern avoidance");
  perms->add_option("--n", perms_args.n, "Permutation length")->required()->check(CLI::PositiveNumber);
  perms->add_option("--avoid", perms_args.avoid,
                    "Patterns the stack-sorted image must avoid (default 231,312)");
  perms->add_flag("--parallel", perms_args.parallel, "Scan permutations on all cores");
  perms->add_option("--format", perms_args.format, "text, csv or json");
  perms->add_option("--out", perms_args.out, "Write data to a file instead of stdout");

  TreesArgs trees_args;
  CLI::App* trees = app.add_subcommand("trees", "List all trees on n vertices");
  trees->add_option("--n", trees_args.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  trees->add_option("--format", trees_args.format, "text or json");
  trees->add_option("--out", trees_args.out, "Write data to a file instead of stdout");

  InjectArgs inject_args;
  CLI::App* inject = app.add_subcommand(
      "inject", "Show the prefix-flip injection on one class (n, k)");
  inject->add_option("--n", inject_args.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  inject->add_option("--k", inject_args.k, "Class index (k-1 right edges)")->required();
  inject->add_option("--format", inject_args.format, "text or json");
  inject->add_option("--out", inject_args.out, "Write data to a file instead of stdout");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Re-derive and check the library's key facts");
  verify->add_option("--suite", verify_args.suite,
                     "numbers, trees, polynomials, permutations or all")
      ->check(CLI::IsMember({"numbers", "trees", "polynomials", "permutations", "all"}));
  verify->add_option("--max-n", verify_args.max_n,
                     "Clamp every per-check size bound to this value")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--parallel", verify_args.parallel,
                   "Scan permutations on all cores");
  verify->add_option("--out", verify_args.out, "Write the JSON summary to a file");

  try {
    app.parse(argc, argv);
    if (table->parsed()) run_table(table_args);
    if (poly->parsed()) run_poly(poly_args);
    if (roots->parsed()) run_roots(roots_args);
    if (perms->parsed()) run_perms(perms_args);
    if (trees->parsed()) run_trees(trees_args);
    if (inject->parsed()) run_inject(inject_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const bona::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bona::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bona::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
