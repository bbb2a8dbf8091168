#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bona/errors.hpp"
#include "bona/numbers.hpp"
#include "bona/permutation.hpp"

using bona::BigInt;
using bona::Permutation;

TEST_CASE("parsing and validation") {
  CHECK(Permutation::parse("231").entries() == std::vector<int>{2, 3, 1});
  CHECK(Permutation::parse("3,1,4,2").entries() == std::vector<int>{3, 1, 4, 2});
  CHECK(Permutation::parse("231").str() == "2,3,1");
  CHECK(Permutation::identity(4) == Permutation::parse("1234"));
  CHECK(Permutation::parse("231").is_full());
  CHECK_FALSE(Permutation({2, 5}).is_full());  // distinct but not 1..n
  CHECK(Permutation::parse("10,2,1,3,4,5,6,7,8,9").size() == 10);

  CHECK_THROWS_AS(Permutation::parse(""), bona::DomainError);
  CHECK_THROWS_AS(Permutation::parse("0"), bona::DomainError);
  CHECK_THROWS_AS(Permutation::parse("102"), bona::DomainError);
  CHECK_THROWS_AS(Permutation::parse("1,1"), bona::DomainError);
  CHECK_THROWS_AS(Permutation::parse("2,x"), bona::DomainError);
  CHECK_THROWS_AS(Permutation::parse(",1"), bona::DomainError);
  CHECK_THROWS_AS(Permutation({1, 1}), bona::DomainError);
  CHECK_THROWS_AS(Permutation({0, 1}), bona::DomainError);
}

TEST_CASE("one pass of stack sorting") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"1", "1"},        {"123", "123"},  {"132", "123"}, {"213", "123"},
      {"231", "213"},    {"312", "123"},  {"321", "123"}, {"3142", "1324"},
      {"2413", "2134"},  {"3241", "2314"}};
  for (const auto& [input, expected] : cases) {
    CAPTURE(input);
    CHECK(bona::stack_sort(Permutation::parse(input)) ==
          Permutation::parse(expected));
  }

  // One pass keeps the multiset of entries and moves the maximum last.
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      const Permutation p{std::vector<int>(perm)};
      const Permutation s = bona::stack_sort(p);
      CHECK(s.is_full());
      CHECK(s.entries().back() == n);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("pattern containment") {
  const Permutation p = Permutation::parse("3142");
  CHECK(bona::contains_pattern(p, Permutation::parse("231")));
  CHECK(bona::contains_pattern(p, Permutation::parse("312")));
  CHECK(bona::contains_pattern(p, Permutation::parse("21")));
  CHECK(bona::contains_pattern(p, p));
  CHECK_FALSE(bona::contains_pattern(p, Permutation::parse("321")));
  CHECK_FALSE(bona::contains_pattern(p, Permutation::parse("12345")));
  CHECK_FALSE(bona::contains_pattern(Permutation::parse("123"),
                                     Permutation::parse("21")));
  CHECK(bona::contains_pattern(p, Permutation()));  // empty pattern

  CHECK(bona::avoids_all(Permutation::identity(5),
                         bona::parse_pattern_set("231,312")));
  CHECK_FALSE(bona::avoids_all(Permutation::parse("2413"),
                               bona::parse_pattern_set("231,312")));

  CHECK(bona::descents(Permutation::parse("123")) == 0);
  CHECK(bona::descents(Permutation::parse("3142")) == 2);
  CHECK(bona::descents(Permutation::parse("321")) == 2);
}

TEST_CASE("pattern set parsing") {
  const auto set = bona::parse_pattern_set("231,312");
  REQUIRE(set.size() == 2);
  CHECK(set[0] == Permutation::parse("231"));
  CHECK(set[1] == Permutation::parse("312"));
  CHECK(bona::parse_pattern_set("21").size() == 1);
  CHECK_THROWS_AS(bona::parse_pattern_set(""), bona::DomainError);
  CHECK_THROWS_AS(bona::parse_pattern_set("231,"), bona::DomainError);
  CHECK_THROWS_AS(bona::parse_pattern_set("232"), bona::DomainError);
  CHECK_THROWS_AS(bona::parse_pattern_set("13"), bona::DomainError);
}

TEST_CASE("descent tables for the two pattern sets") {
  for (const char* patterns : {"231,312", "132,312"}) {
    CAPTURE(patterns);
    const auto set = bona::parse_pattern_set(patterns);
    const auto t3 = bona::preimage_descent_table(3, set);
    CHECK(t3.counts == std::vector<BigInt>{BigInt(1), BigInt(4), BigInt(1)});
    CHECK(t3.total() == 6);

    // Against the tree counts, the core claim of the table.
    for (int n = 1; n <= 7; ++n) {
      const auto table = bona::preimage_descent_table(n, set);
      const auto row = bona::bona_explicit_triangle(n).row(n);
      CAPTURE(n);
      REQUIRE(table.counts.size() == row.size());
      for (std::size_t k = 0; k < row.size(); ++k) {
        CHECK(table.counts[k] == row[k]);
      }
      CHECK(bona::descent_table_symmetric(table));
      CHECK(table.total() == bona::boolean_catalan(n));
    }
  }

  // All n! permutations stack-sort into sorted order for n <= 2, so tiny
  // tables count everything.
  const auto t1 = bona::preimage_descent_table(1, bona::parse_pattern_set("21"));
  CHECK(t1.counts == std::vector<BigInt>{BigInt(1)});

  CHECK_THROWS_AS(bona::preimage_descent_table(0, bona::parse_pattern_set("21")),
                  bona::DomainError);
  CHECK_THROWS_AS(bona::preimage_descent_table(11, bona::parse_pattern_set("21")),
                  bona::SizeError);
}

TEST_CASE("parallel scans agree with serial ones") {
  for (const char* patterns : {"231,312", "132,312"}) {
    const auto set = bona::parse_pattern_set(patterns);
    const auto serial = bona::preimage_descent_table(7, set, false);
    const auto parallel = bona::preimage_descent_table(7, set, true);
    CHECK(serial.counts == parallel.counts);
  }
  CHECK(bona::count_sorted_preimages(7, false) ==
        bona::count_sorted_preimages(7, true));
}

TEST_CASE("fully sorted preimages are counted by catalan numbers") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(bona::count_sorted_preimages(n) == bona::catalan(n));
  }
  CHECK_THROWS_AS(bona::count_sorted_preimages(0), bona::DomainError);
  CHECK_THROWS_AS(bona::count_sorted_preimages(11), bona::SizeError);
}

TEST_CASE("table symmetry helper") {
  bona::DescentTable odd;
  odd.n = 3;
  odd.counts = {BigInt(1), BigInt(7), BigInt(1)};
  CHECK(bona::descent_table_symmetric(odd));
  odd.counts = {BigInt(1), BigInt(7), BigInt(2)};
  CHECK_FALSE(bona::descent_table_symmetric(odd));
  odd.counts = {};
  CHECK(bona::descent_table_symmetric(odd));
}
