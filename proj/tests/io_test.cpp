#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>

#include "json.hpp"

#include "bona/bona_poly.hpp"
#include "bona/errors.hpp"
#include "bona/io.hpp"
#include "bona/numbers.hpp"
#include "bona/permutation.hpp"
#include "bona/sturm.hpp"
#include "bona/tree.hpp"

using bona::Format;
using nlohmann::json;

namespace {

json load_schema(const std::string& name) {
  const std::string path = std::string(SCHEMA_DIR) + "/" + name;
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing schema " << path);
  return json::parse(in);
}

// Checks an instance against the subset of json-schema the files in
// docs/schemas actually use: type, properties, required,
// additionalProperties, items, enum, pattern and minimum.
bool conforms(const json& instance, const json& schema, std::string& why) {
  if (schema.contains("type")) {
    const std::string type = schema["type"];
    const bool ok = (type == "object" && instance.is_object()) ||
                    (type == "array" && instance.is_array()) ||
                    (type == "string" && instance.is_string()) ||
                    (type == "boolean" && instance.is_boolean()) ||
                    (type == "integer" && instance.is_number_integer());
    if (!ok) {
      why = "expected " + type + ", got " + instance.dump();
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema["enum"]) hit = hit || v == instance;
    if (!hit) {
      why = instance.dump() + " is not one of " + schema["enum"].dump();
      return false;
    }
  }
  if (schema.contains("pattern") && instance.is_string()) {
    const std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_search(instance.get<std::string>(), re)) {
      why = instance.dump() + " does not match " +
            schema["pattern"].get<std::string>();
      return false;
    }
  }
  if (schema.contains("minimum") && instance.is_number()) {
    if (instance.get<double>() < schema["minimum"].get<double>()) {
      why = instance.dump() + " is below the minimum";
      return false;
    }
  }
  if (instance.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!instance.contains(key.get<std::string>())) {
          why = "missing required key " + key.get<std::string>();
          return false;
        }
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (instance.contains(key) && !conforms(instance[key], sub, why)) {
          why = key + ": " + why;
          return false;
        }
      }
      if (schema.value("additionalProperties", json(true)) == json(false)) {
        for (const auto& [key, value] : instance.items()) {
          (void)value;
          if (!schema["properties"].contains(key)) {
            why = "unexpected key " + key;
            return false;
          }
        }
      }
    }
  }
  if (instance.is_array() && schema.contains("items")) {
    for (const auto& element : instance) {
      if (!conforms(element, schema["items"], why)) return false;
    }
  }
  return true;
}

void check_schema(const std::string& rendered, const std::string& schema_name) {
  std::string why;
  const bool ok = conforms(json::parse(rendered), load_schema(schema_name), why);
  CHECK_MESSAGE(ok, schema_name << ": " << why);
}

}  // namespace

TEST_CASE("format names") {
  CHECK(bona::parse_format("text") == Format::text);
  CHECK(bona::parse_format("csv") == Format::csv);
  CHECK(bona::parse_format("json") == Format::json);
  CHECK_THROWS_AS(bona::parse_format("yaml"), bona::DomainError);
  CHECK_THROWS_AS(bona::parse_format("TEXT"), bona::DomainError);
  CHECK_THROWS_AS(bona::parse_format(""), bona::DomainError);
}

TEST_CASE("default format comes from the environment") {
  unsetenv("BONA_FORMAT");
  CHECK(bona::default_format() == Format::text);
  setenv("BONA_FORMAT", "json", 1);
  CHECK(bona::default_format() == Format::json);
  setenv("BONA_FORMAT", "", 1);
  CHECK(bona::default_format() == Format::text);
  setenv("BONA_FORMAT", "nope", 1);
  CHECK_THROWS_AS(bona::default_format(), bona::DomainError);
  unsetenv("BONA_FORMAT");
}

TEST_CASE("triangle rendering") {
  const bona::Triangle t = bona::bona_explicit_triangle(3);
  CHECK(bona::render_triangle(t, Format::text) == "1\n1, 1\n1, 4, 1\n");
  CHECK(bona::render_triangle(t, Format::csv) ==
        "n,k,value\n1,1,1\n2,1,1\n2,2,1\n3,1,1\n3,2,4\n3,3,1\n");

  const std::string out = bona::render_triangle(t, Format::json);
  const json doc = json::parse(out);
  CHECK(doc["rows"].size() == 3);
  CHECK(doc["rows"][2]["n"] == 3);
  CHECK(doc["rows"][2]["values"] == json::array({"1", "4", "1"}));
  check_schema(out, "triangle.json");

  // Wide rows keep exact values; the schema pins them to decimal strings.
  const std::string wide =
      bona::render_triangle(bona::bona_explicit_triangle(40), Format::json);
  check_schema(wide, "triangle.json");
}

TEST_CASE("descent table rendering") {
  bona::DescentTable table;
  table.n = 3;
  table.counts = {bona::BigInt(1), bona::BigInt(4), bona::BigInt(1)};
  CHECK(bona::render_descent_table(table, "231,312", Format::text) == "1, 4, 1\n");
  CHECK(bona::render_descent_table(table, "231,312", Format::csv) ==
        "n,k,value\n3,1,1\n3,2,4\n3,3,1\n");
  const std::string out = bona::render_descent_table(table, "231,312", Format::json);
  const json doc = json::parse(out);
  CHECK(doc["n"] == 3);
  CHECK(doc["patterns"] == "231,312");
  CHECK(doc["counts"] == json::array({"1", "4", "1"}));
  check_schema(out, "descent_table.json");
}

TEST_CASE("polynomial rendering") {
  CHECK(bona::render_polynomial(bona::bona_poly(3), Format::text) ==
        "u + 4*u^2 + u^3\n");
  CHECK(bona::render_polynomial(bona::IntPolynomial({bona::BigInt(1), bona::BigInt(-2), bona::BigInt(1)}),
                                Format::text) == "1 - 2*u + u^2\n");
  CHECK(bona::render_polynomial(bona::IntPolynomial(), Format::text) == "0\n");
  CHECK(bona::render_polynomial(bona::IntPolynomial({bona::BigInt(0), bona::BigInt(-1)}),
                                Format::text) == "-u\n");
  CHECK(bona::render_polynomial(bona::IntPolynomial({bona::BigInt(0), bona::BigInt(0), bona::BigInt(3)}),
                                Format::text) == "3*u^2\n");
  CHECK(bona::render_polynomial(bona::IntPolynomial({bona::BigInt(-7)}),
                                Format::text) == "-7\n");

  const std::string out = bona::render_polynomial(bona::bona_poly(3), Format::json);
  CHECK(json::parse(out) == json::array({"0", "1", "4", "1"}));
  check_schema(out, "polynomial.json");

  CHECK_THROWS_AS(bona::render_polynomial(bona::bona_poly(3), Format::csv),
                  bona::DomainError);
}

TEST_CASE("root report rendering") {
  bona::RootReport report;
  report.n = 3;
  report.precision = bona::BigRat(1, 1024);
  report.intervals = bona::isolate_roots(bona::bona_poly(3), report.precision);
  report.interlacing = "certified";

  const std::string text = bona::render_root_report(report, Format::text);
  CHECK(text.find("interlacing with the previous row: certified\n") !=
        std::string::npos);

  const std::string out = bona::render_root_report(report, Format::json);
  const json doc = json::parse(out);
  CHECK(doc["n"] == 3);
  CHECK(doc["precision"] == "1/1024");
  CHECK(doc["roots"].size() == 3);
  CHECK(doc["interlacing"] == "certified");
  check_schema(out, "root_report.json");

  CHECK_THROWS_AS(bona::render_root_report(report, Format::csv),
                  bona::DomainError);
}

TEST_CASE("tree list rendering") {
  std::vector<std::string> trees;
  for (const auto& t : bona::enumerate_trees(2)) trees.push_back(bona::to_string(t));
  CHECK(bona::render_tree_list(2, trees, Format::text) ==
        "(_ \xe2\x80\xa2)\n(\xe2\x80\xa2 _)\n");
  const std::string out = bona::render_tree_list(2, trees, Format::json);
  const json doc = json::parse(out);
  CHECK(doc["n"] == 2);
  CHECK(doc["count"] == 2);
  CHECK(doc["trees"].size() == 2);
  check_schema(out, "tree_list.json");
  CHECK_THROWS_AS(bona::render_tree_list(2, trees, Format::csv), bona::DomainError);
}

TEST_CASE("rational parsing round trip") {
  CHECK(bona::parse_rational("7/2") == bona::BigRat(7, 2));
  CHECK(bona::parse_rational("-3") == bona::BigRat(-3));
  CHECK(bona::parse_rational("4/6") == bona::BigRat(2, 3));
  CHECK(bona::to_decimal(bona::BigRat(1, 1024)) == "1/1024");
  CHECK(bona::to_decimal(bona::BigRat(-5)) == "-5");
  CHECK_THROWS_AS(bona::parse_rational("1/0"), bona::DomainError);
  CHECK_THROWS_AS(bona::parse_rational("abc"), bona::DomainError);
  CHECK_THROWS_AS(bona::parse_rational(""), bona::DomainError);
  CHECK_THROWS_AS(bona::parse_rational("1/ 2"), bona::DomainError);
}
