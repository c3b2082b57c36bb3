#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ballot/patterns.hpp"
#include "ballot/statistics.hpp"
#include "ballot/walks.hpp"

using namespace ballot;

namespace {
const std::vector<Pattern> kThrees = {
    Pattern::parse("123"), Pattern::parse("132"), Pattern::parse("213"),
    Pattern::parse("231"), Pattern::parse("312"), Pattern::parse("321")};
}

TEST_CASE("pattern parsing") {
  CHECK(Pattern::parse("213").word() == std::vector<int>{2, 1, 3});
  CHECK(Pattern::parse("2 1 3").word() == std::vector<int>{2, 1, 3});
  CHECK_THROWS_AS(Pattern::parse("225"), std::invalid_argument);
}

TEST_CASE("containment spot checks") {
  CHECK_FALSE(contains(Permutation::parse("3 2 1"), Pattern::parse("123")));
  CHECK(contains(Permutation::parse("8 3 9 1 6 4 7 5 2"), Pattern::parse("213")));
  CHECK(contains_naive({3, 1, 6}, Pattern::parse("213")));
  CHECK_FALSE(contains(Permutation::parse("2 3 1"), Pattern::parse("213")));
  CHECK(contains(Permutation::parse("1 3 2 4"), Pattern::parse("132")));
}

TEST_CASE("fast scans agree with the naive oracle, exhaustively to n = 7") {
  for (int n = 0; n <= 7; ++n)
    for_each_in_class({PermClass::All}, n, [&](const Permutation& p) {
      for (const Pattern& pat : kThrees)
        REQUIRE(contains(p, pat) == contains_naive(p.word(), pat));
      return true;
    });
}

TEST_CASE("fast scans agree with the naive oracle on random longer words") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    const int n = 8 + static_cast<int>(rng() % 5);
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::shuffle(w.begin(), w.end(), rng);
    for (const Pattern& pat : kThrees)
      CHECK(contains(w, pat) == contains_naive(w, pat));
  }
}

TEST_CASE("every length-3 pattern has Catalan-many avoiders, n <= 8") {
  auto catalan = [](int n) -> BigInt {
    BigInt c = 1;
    for (int i = 1; i <= n; ++i) c = c * (n + i) / i;
    return c / (n + 1);
  };
  for (int n = 0; n <= 8; ++n)
    for (const Pattern& pat : kThrees)
      CHECK(avoid_count({PermClass::All}, n, pat) == catalan(n));
}

TEST_CASE("recurrence tables: initial conditions and samples") {
  const auto E = RecurrenceTable::build(RecurrenceId::E, 6, 4);
  CHECK(E.at(0, 0, 0) == 1);
  CHECK(E.at(0, 1, 0) == 0);
  CHECK(E.at(0, 1, 1) == 1);
  CHECK(E.at(2, 0, 0) == 2);
  BigInt axis = 0;
  for (int j = 0; j <= 6; ++j) axis += E.at(2, 0, j);
  CHECK(axis == 3);  // ballot 213-avoiders of length 3
  CHECK(ballot_recurrence(RecurrenceId::E, 2, 0, 0) == 2);
  CHECK_THROWS_AS(ballot_recurrence(RecurrenceId::E, -1, 0, 0), std::invalid_argument);
}

TEST_CASE("E, E_alt and the Gessel table agree") {
  const auto E = RecurrenceTable::build(RecurrenceId::E, 8, 8);
  const auto EA = RecurrenceTable::build(RecurrenceId::EAlt, 8, 8);
  const auto F = CountTable::build(WalkKind::Gessel, 8, 8, WalkMethod::Recurrence);
  for (int n = 0; n <= 8; ++n)
    for (int h = 0; h <= 8; ++h)
      for (int b = 0; b <= 8; ++b) {
        CHECK(E.at(n, h, b) == EA.at(n, h, b));
        CHECK(E.at(n, h, b) == F.at(n, h, b));
      }
}

TEST_CASE("G and the GB table agree") {
  const auto G = RecurrenceTable::build(RecurrenceId::G, 8, 8);
  const auto H = CountTable::build(WalkKind::GB, 8, 8, WalkMethod::Recurrence);
  for (int n = 0; n <= 8; ++n)
    for (int h = 0; h <= 8; ++h)
      for (int b = 0; b <= 8; ++b) CHECK(G.at(n, h, b) == H.at(n, h, b));
}

TEST_CASE("recurrence counts match filtered enumeration, small range") {
  // E_n(h,b) counts 213-avoiding words of length n+1 whose path from h stays
  // nonnegative and ends at b; same for G with 231
  const auto E = RecurrenceTable::build(RecurrenceId::E, 5, 3);
  const auto G = RecurrenceTable::build(RecurrenceId::G, 5, 3);
  for (int n = 0; n <= 5; ++n)
    for (int h = 0; h <= 3; ++h)
      for (int b = 0; b <= 3; ++b) {
        BigInt e = 0, g = 0;
        for_each_in_class({PermClass::All}, n + 1, [&](const Permutation& p) {
          if (is_hb_ballot(p, h, b)) {
            if (!contains(p, Pattern::parse("213"))) ++e;
            if (!contains(p, Pattern::parse("231"))) ++g;
          }
          return true;
        });
        CHECK(e == E.at(n, h, b));
        CHECK(g == G.at(n, h, b));
      }
}

TEST_CASE("ballot avoider sequences, small n") {
  const std::vector<std::pair<const char*, std::vector<long long>>> rows = {
      {"123", {1, 1, 2, 2, 5, 5, 14}},  {"321", {1, 1, 3, 9, 28, 90, 297}},
      {"132", {1, 1, 2, 4, 10, 25, 70}}, {"231", {1, 1, 2, 4, 10, 25, 70}},
      {"213", {1, 1, 3, 6, 21, 52, 193}}, {"312", {1, 1, 3, 6, 21, 52, 193}}};
  for (const auto& [pat, vals] : rows)
    for (int n = 1; n <= static_cast<int>(vals.size()); ++n)
      CHECK(avoid_count({PermClass::Ballot}, n, Pattern::parse(pat)) ==
            BigInt(vals[n - 1]));
}

TEST_CASE("213-avoiding odd-length dyck words are counted by the closed form") {
  for (int m = 0; m <= 3; ++m)
    CHECK(avoid_count({PermClass::Dyck}, 2 * m + 1, Pattern::parse("213")) ==
          gessel_closed_form(m));
}

TEST_CASE("wilf maps on small words") {
  CHECK(wilf_map(WilfMap::Varphi213To312, Permutation::parse("2 1")).str() == "2 1");
  CHECK(wilf_map(WilfMap::Eta132To231, Permutation::parse("2 1")).str() == "2 1");
  CHECK(wilf_map(WilfMap::Varphi213To312, Permutation::parse("3 1 2")).str() ==
        "2 1 3");
  CHECK_THROWS_AS(wilf_map(WilfMap::Varphi213To312, Permutation::parse("2 1 3")),
                  std::domain_error);
  CHECK_THROWS_AS(wilf_map(WilfMap::Eta132To231, Permutation::parse("1 3 2")),
                  std::domain_error);
}

TEST_CASE("wilf maps are descent-preserving bijections, n <= 7") {
  const Pattern p213 = Pattern::parse("213"), p312 = Pattern::parse("312");
  const Pattern p132 = Pattern::parse("132"), p231 = Pattern::parse("231");
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> img213, img132;
    long long src213 = 0, src132 = 0;
    for_each_in_class({PermClass::All}, n, [&](const Permutation& p) {
      if (!contains(p, p213)) {
        ++src213;
        const Permutation q = wilf_map(WilfMap::Varphi213To312, p);
        REQUIRE_FALSE(contains(q, p312));
        REQUIRE(descent_positions(p) == descent_positions(q));
        img213.insert(q.str());
      }
      if (!contains(p, p132)) {
        ++src132;
        const Permutation q = wilf_map(WilfMap::Eta132To231, p);
        REQUIRE_FALSE(contains(q, p231));
        REQUIRE(descent_positions(p) == descent_positions(q));
        img132.insert(q.str());
      }
      return true;
    });
    CHECK(static_cast<long long>(img213.size()) == src213);
    CHECK(static_cast<long long>(img132.size()) == src132);
  }
}

TEST_CASE("wilf equivalence restricts to ballot avoiders, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(avoid_count({PermClass::Ballot}, n, Pattern::parse("213")) ==
          avoid_count({PermClass::Ballot}, n, Pattern::parse("312")));
    CHECK(avoid_count({PermClass::Ballot}, n, Pattern::parse("132")) ==
          avoid_count({PermClass::Ballot}, n, Pattern::parse("231")));
  }
}
