#include "bona/io.hpp"

#include <cstdlib>

#include "json.hpp"

#include "bona/errors.hpp"

namespace bona {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw DomainError("unknown format '" + name + "' (expected text, csv or json)");
}

Format default_format() {
  const char* env = std::getenv("BONA_FORMAT");
  if (env == nullptr || *env == '\0') return Format::text;
  return parse_format(env);
}

std::string render_triangle(const Triangle& t, Format format) {
  switch (format) {
    case Format::text: {
      std::string out;
      for (int n = 1; n <= t.n_max(); ++n) {
        const auto& row = t.row(n);
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i > 0) out += ", ";
          out += to_decimal(row[i]);
        }
        out += "\n";
      }
      return out;
    }
    case Format::csv: {
      std::string out = "n,k,value\n";
      for (int n = 1; n <= t.n_max(); ++n) {
        for (int k = 1; k <= n; ++k) {
          out += std::to_string(n) + "," + std::to_string(k) + "," +
                 to_decimal(t.at(n, k)) + "\n";
        }
      }
      return out;
    }
    case Format::json: {
      OrderedJson rows = OrderedJson::array();
      for (int n = 1; n <= t.n_max(); ++n) {
        OrderedJson values = OrderedJson::array();
        for (const auto& v : t.row(n)) values.push_back(to_decimal(v));
        rows.push_back(OrderedJson{{"n", n}, {"values", values}});
      }
      return dump(OrderedJson{{"rows", rows}});
    }
  }
  throw DomainError("unhandled format");
}

std::string render_descent_table(const DescentTable& table,
                                 const std::string& patterns, Format format) {
  switch (format) {
    case Format::text: {
      std::string out;
      for (std::size_t i = 0; i < table.counts.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_decimal(table.counts[i]);
      }
      return out + "\n";
    }
    case Format::csv: {
      std::string out = "n,k,value\n";
      for (std::size_t i = 0; i < table.counts.size(); ++i) {
        out += std::to_string(table.n) + "," + std::to_string(i + 1) + "," +
               to_decimal(table.counts[i]) + "\n";
      }
      return out;
    }
    case Format::json: {
      OrderedJson counts = OrderedJson::array();
      for (const auto& c : table.counts) counts.push_back(to_decimal(c));
      return dump(OrderedJson{
          {"n", table.n}, {"patterns", patterns}, {"counts", counts}});
    }
  }
  throw DomainError("unhandled format");
}

std::string render_polynomial(const IntPolynomial& p, Format format) {
  switch (format) {
    case Format::text: {
      if (p.is_zero()) return "0\n";
      std::string out;
      for (int d = 0; d <= p.degree(); ++d) {
        const BigInt& c = p.coeff(d);
        if (c == 0) continue;
        const BigInt abs = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
          if (c < 0) out += "-";
        } else {
          out += c < 0 ? " - " : " + ";
        }
        const bool show_coeff = (abs != 1 || d == 0);
        if (show_coeff) out += to_decimal(abs);
        if (d >= 1) {
          if (show_coeff) out += "*";
          out += "u";
          if (d >= 2) out += "^" + std::to_string(d);
        }
      }
      return out + "\n";
    }
    case Format::json: {
      OrderedJson coeffs = OrderedJson::array();
      for (int d = 0; d <= p.degree(); ++d) coeffs.push_back(to_decimal(p.coeff(d)));
      return dump(coeffs);
    }
    case Format::csv:
      throw DomainError("polynomials have no csv form (use text or json)");
  }
  throw DomainError("unhandled format");
}

std::string render_root_report(const RootReport& report, Format format) {
  switch (format) {
    case Format::text: {
      std::string out;
      for (const auto& iv : report.intervals) {
        out += "[" + to_decimal(iv.lo) + ", " + to_decimal(iv.hi) + "]\n";
      }
      out += "interlacing with the previous row: " + report.interlacing + "\n";
      return out;
    }
    case Format::json: {
      OrderedJson intervals = OrderedJson::array();
      for (const auto& iv : report.intervals) {
        intervals.push_back(OrderedJson{{"lo", to_decimal(iv.lo)},
                                        {"hi", to_decimal(iv.hi)}});
      }
      return dump(OrderedJson{{"n", report.n},
                              {"precision", to_decimal(report.precision)},
                              {"roots", intervals},
                              {"interlacing", report.interlacing}});
    }
    case Format::csv:
      throw DomainError("root reports have no csv form (use text or json)");
  }
  throw DomainError("unhandled format");
}

std::string render_tree_list(int n, const std::vector<std::string>& trees,
                             Format format) {
  switch (format) {
    case Format::text: {
      std::string out;
      for (const auto& t : trees) out += t + "\n";
      return out;
    }
    case Format::json: {
      OrderedJson list = OrderedJson::array();
      for (const auto& t : trees) list.push_back(t);
      return dump(OrderedJson{
          {"n", n}, {"count", trees.size()}, {"trees", list}});
    }
    case Format::csv:
      throw DomainError("tree listings have no csv form (use text or json)");
  }
  throw DomainError("unhandled format");
}

}  // namespace bona
