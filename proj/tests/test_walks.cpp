#include <doctest.h>

#include "ballot/walks.hpp"

using namespace ballot;

TEST_CASE("zero-step walks") {
  for (WalkKind kind : {WalkKind::Gessel, WalkKind::GB}) {
    for (WalkMethod m : {WalkMethod::StepDp, WalkMethod::Recurrence, WalkMethod::Brute}) {
      const Coord p0 = kind == WalkKind::Gessel ? Coord{0, 0} : Coord{0, 0};
      const Coord p2 = kind == WalkKind::Gessel ? Coord{0, 2} : Coord{2, 0};
      CHECK(count_walks(kind, 0, p0, p0, m) == 1);
      CHECK(count_walks(kind, 0, p2, p2, m) == 1);
      CHECK(count_walks(kind, 0, p0, p2, m) == 0);
    }
  }
}

TEST_CASE("two-step closed walks") {
  // up-down and diagonal out-and-back
  CHECK(count_walks(WalkKind::Gessel, 2, {0, 0}, {0, 0}, WalkMethod::Brute) == 2);
  CHECK(count_walks(WalkKind::Gessel, 2, {0, 0}, {0, 0}, WalkMethod::Recurrence) == 2);
  // right-left only: up from the diagonal is forbidden
  CHECK(count_walks(WalkKind::GB, 2, {0, 0}, {0, 0}, WalkMethod::Brute) == 1);
  CHECK(count_walks(WalkKind::GB, 2, {0, 0}, {0, 0}, WalkMethod::Recurrence) == 1);
}

TEST_CASE("axis sums and the 213-avoider connection") {
  // 2-step walks from the origin ending on the y-axis: 3 in total
  CHECK(count_walks_axis_total(WalkKind::Gessel, 2, {0, 0}, WalkMethod::StepDp) == 3);
  CHECK(count_walks_axis_total(WalkKind::Gessel, 2, {0, 0}, WalkMethod::Brute) == 3);
}

TEST_CASE("all three methods agree on small tables") {
  for (WalkKind kind : {WalkKind::Gessel, WalkKind::GB}) {
    const auto rec = CountTable::build(kind, 8, 6, WalkMethod::Recurrence);
    const auto dp = CountTable::build(kind, 8, 6, WalkMethod::StepDp);
    const auto br = CountTable::build(kind, 8, 6, WalkMethod::Brute);
    for (int n = 0; n <= 8; ++n)
      for (int h = 0; h <= 6; ++h)
        for (int b = 0; b <= 6; ++b) {
          CHECK(rec.at(n, h, b) == dp.at(n, h, b));
          CHECK(rec.at(n, h, b) == br.at(n, h, b));
        }
  }
}

TEST_CASE("gessel closed form") {
  CHECK(gessel_closed_form(0) == 1);
  CHECK(gessel_closed_form(1) == 2);
  CHECK(gessel_closed_form(2) == 11);
  CHECK(gessel_closed_form(3) == 85);
  CHECK(gessel_closed_form(4) == 782);
  CHECK(gessel_closed_form(5) == 8004);
  for (int n = 0; n <= 6; ++n)
    CHECK(gessel_closed_form(n) ==
          count_walks(WalkKind::Gessel, 2 * n, {0, 0}, {0, 0}, WalkMethod::StepDp));
}

TEST_CASE("GB axis totals are Catalan products") {
  auto catalan = [](int n) -> BigInt {
    BigInt c = 1;
    for (int i = 1; i <= n; ++i) c = c * (n + i) / i;
    return c / (n + 1);
  };
  for (int n = 1; n <= 8; ++n)
    CHECK(count_walks_axis_total(WalkKind::GB, n, {0, 0}, WalkMethod::StepDp) ==
          catalan((n + 1) / 2) * catalan((n + 2) / 2));
}

TEST_CASE("region and argument validation") {
  CHECK_THROWS_AS(count_walks(WalkKind::Gessel, 1, {-1, 0}, {0, 0}, WalkMethod::StepDp),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_walks(WalkKind::GB, 1, {0, 1}, {0, 0}, WalkMethod::StepDp),
                  std::invalid_argument);  // above the diagonal
  CHECK_THROWS_AS(count_walks(WalkKind::Gessel, 1, {1, 1}, {0, 0}, WalkMethod::Recurrence),
                  std::invalid_argument);  // off-axis start for the recurrence
  CHECK_THROWS_AS(count_walks(WalkKind::Gessel, 15, {0, 0}, {0, 0}, WalkMethod::Brute),
                  std::invalid_argument);  // brute guard
  CHECK_THROWS_AS(count_walks(WalkKind::Gessel, -1, {0, 0}, {0, 0}, WalkMethod::StepDp),
                  std::invalid_argument);
  // GB walks may touch the diagonal itself
  CHECK(count_walks(WalkKind::GB, 0, {2, 2}, {2, 2}, WalkMethod::StepDp) == 1);
}

TEST_CASE("gessel parity structure is a regression guard") {
  const auto rec = CountTable::build(WalkKind::Gessel, 7, 5, WalkMethod::Recurrence);
  const auto dp = CountTable::build(WalkKind::Gessel, 7, 5, WalkMethod::StepDp);
  for (int n = 0; n <= 7; ++n)
    for (int h = 0; h <= 5; ++h)
      for (int b = 0; b <= 5; ++b)
        if (dp.at(n, h, b) == 0) CHECK(rec.at(n, h, b) == 0);
}
