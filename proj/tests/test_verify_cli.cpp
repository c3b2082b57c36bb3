#include <doctest.h>

#include <algorithm>
#include <set>

#include "ballot/verify.hpp"

using namespace ballot;

TEST_CASE("suite registry") {
  const auto& names = verify_suite_names();
  for (const char* n : {"spiro", "wz", "main_thm", "table1", "gessel213",
                        "gb231", "egf", "clusters", "roundtrip", "all"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK(verify_suite_guard("clusters") == 6);
  CHECK_THROWS_AS(verify_suite_guard("nope"), std::invalid_argument);
}

TEST_CASE("guards reject oversized requests") {
  CHECK_THROWS_AS(verify_suite("clusters", 9), std::invalid_argument);
  CHECK_THROWS_AS(verify_suite("wz", 20), std::invalid_argument);
}

TEST_CASE("small suites pass") {
  for (const char* name : {"spiro", "wz", "main_thm", "table1"}) {
    const Report r = verify_suite(name, 6);
    INFO(name);
    CHECK(r.all_pass());
    CHECK(!r.checks.empty());
    for (const auto& c : r.checks) {
      CHECK(!c.description.empty());
      CHECK(c.pass == (c.expected == c.actual ||
                       (c.expected == "true" && c.actual == "true")));
    }
  }
}

TEST_CASE("walk and egf suites pass at small sizes") {
  CHECK(verify_suite("gessel213", 6).all_pass());
  CHECK(verify_suite("gb231", 6).all_pass());
  CHECK(verify_suite("egf", 5).all_pass());
  CHECK(verify_suite("clusters", 4).all_pass());
}

TEST_CASE("roundtrip suite is reproducible for a fixed seed") {
  const Report a = verify_suite("roundtrip", 8, 42);
  const Report b = verify_suite("roundtrip", 8, 42);
  CHECK(a.all_pass());
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].description == b.checks[i].description);
    CHECK(a.checks[i].actual == b.checks[i].actual);
  }
  CHECK(a.seed == 42);
}

TEST_CASE("the aggregate suite clamps to per-suite guards") {
  const Report r = verify_suite("all", 4);
  CHECK(r.all_pass());
  // every sub-suite contributed
  std::set<std::string> suites;
  for (const auto& c : r.checks) suites.insert(c.suite);
  CHECK(suites.size() == 9);
}
