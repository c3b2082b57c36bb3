// Acceptance suite: one test case per criterion, each printing a pass/fail
// line. Exact integer equalities throughout.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "ballot/clusters.hpp"
#include "ballot/decomp.hpp"
#include "ballot/enumerate.hpp"
#include "ballot/patterns.hpp"
#include "ballot/series.hpp"
#include "ballot/statistics.hpp"
#include "ballot/walks.hpp"

using namespace ballot;

namespace {

int g_pass = 0, g_fail = 0;

void report(int idx, const char* what, bool ok) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, what);
  std::fflush(stdout);
  (ok ? g_pass : g_fail) += 1;
  CHECK_MESSAGE(ok, what);
}

BigInt catalan(int n) {
  BigInt c = 1;
  for (int i = 1; i <= n; ++i) c = c * (n + i) / i;
  return c / (n + 1);
}

using Poly = std::map<int, BigInt>;

// counts of pattern-avoiding words of S_{n+1} that are (h,b)-ballot, for all
// h,b <= cap, in one enumeration pass
std::vector<std::vector<BigInt>> hb_avoider_counts(int n, const Pattern& pat,
                                                   int cap) {
  std::vector<std::vector<BigInt>> out(cap + 1, std::vector<BigInt>(cap + 1, 0));
  for_each_in_class({PermClass::All}, n + 1, [&](const Permutation& p) {
    if (contains(p, pat)) return true;
    const auto prof = ballot_profile(p, 0);
    const int min_rel = *std::min_element(prof.heights.begin(), prof.heights.end());
    for (int h = 0; h <= cap; ++h) {
      if (h + min_rel < 0) continue;
      const int b = h + prof.end_height;
      if (0 <= b && b <= cap) ++out[h][b];
    }
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("1: cardinalities |B_n| = |O_n| = b_n for n = 0..10") {
  const auto egf = series_coefficients(SeriesKind::BallotEgf, 10);
  const std::vector<long long> ref = {1, 1, 1, 3, 9, 45, 225, 1575, 11025, 99225};
  bool ok = true;
  for (int n = 0; n <= 10; ++n) {
    const BigInt bn = n <= 9 ? BigInt(ref[n]) : egf.count(10, 0);
    if (count_class_parallel({PermClass::Ballot}, n) != bn) ok = false;
    if (count_class_parallel({PermClass::OddOrder}, n) != bn) ok = false;
  }
  ok = ok && egf.count(10, 0) == BigInt(893025);
  report(1, "|ballot_n| = |odd_order_n| = b_n, n <= 10", ok);
}

TEST_CASE("2: descent / exc_tilde equidistribution for n <= 9") {
  bool ok = true;
  for (int n = 0; n <= 9; ++n) {
    Poly lhs, rhs;
    for_each_in_class({PermClass::Ballot}, n, [&](const Permutation& p) {
      ++lhs[statistics(p).des];
      return true;
    });
    for_each_in_class({PermClass::OddOrder}, n, [&](const Permutation& p) {
      ++rhs[statistics(p).exc_tilde];
      return true;
    });
    if (lhs != rhs) ok = false;
  }
  report(2, "sum t^des over B_n = sum t^exc~ over O_n, n <= 9", ok);
}

TEST_CASE("3: neighbor-refined equidistribution for n <= 8") {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    std::map<std::pair<int, int>, Poly> bside, oside;
    for_each_in_class({PermClass::Ballot}, n, [&](const Permutation& p) {
      const auto inv = p.inverse_word();
      const int pos = inv[n - 1];
      if (1 < pos && pos < n)
        ++bside[std::minmax(p.at(pos - 1), p.at(pos + 1))][statistics(p).des];
      return true;
    });
    for_each_in_class({PermClass::OddOrder}, n, [&](const Permutation& p) {
      if (p.at(n) != n)
        ++oside[std::minmax(p.inverse_word()[n - 1], p.at(n))][statistics(p).exc_tilde];
      return true;
    });
    if (bside != oside) ok = false;
  }
  report(3, "B_n(i,j) and O_n(i,j) distributions match for all pairs, n <= 8", ok);
}

TEST_CASE("4: the main bijection for n <= 9") {
  bool ok = true;
  for (int n = 0; n <= 9 && ok; ++n) {
    std::set<std::string> images;
    BigInt count = 0;
    for_each_in_class({PermClass::Ballot}, n, [&](const Permutation& p) {
      const CycleSystem q = Psi(p);
      ++count;
      images.insert(q.str());
      if (!q.odd_order()) ok = false;
      if (Psi_inv(q) != p) ok = false;
      const Permutation qp = q.to_permutation();
      if (statistics(p).des != statistics(qp).exc_tilde) ok = false;
      if (peaks(p).peak_set != peaks(qp).cpeak_set) ok = false;
      return ok;
    });
    if (ok && (BigInt(images.size()) != count ||
               count != count_class({PermClass::OddOrder}, n)))
      ok = false;
  }
  report(4, "Psi bijective with des = exc~ and PEAK = cPEAK, n <= 9", ok);
}

TEST_CASE("5: the box-word bijection on supports of size <= 6") {
  const std::vector<std::vector<int>> supports = {
      {},       {1},       {1, 2},       {1, 2, 3},       {1, 2, 3, 4},
      {1, 2, 3, 4, 5},     {1, 2, 3, 4, 5, 6},            {2, 4},
      {2, 4, 7}, {3, 5, 8, 9}, {2, 4, 5, 7, 9}, {3, 5, 8, 9, 12, 14}};
  bool ok = true;
  for (const auto& A : supports) {
    if (A.empty()) continue;
    const auto bps = enumerate_bp(A);
    const auto cbps = enumerate_cbp(A);
    const std::set<CyclicBoxPerm> universe(cbps.begin(), cbps.end());
    std::set<CyclicBoxPerm> images;
    for (const BoxWord& w : bps) {
      const CyclicBoxPerm c = psi(w);
      if (!universe.count(c)) ok = false;
      images.insert(c);
      if (psi_inv(c) != w) ok = false;
      if (box_neighbor_multiset(w) != box_neighbor_multiset(c)) ok = false;
    }
    if (images.size() != bps.size() || bps.size() != cbps.size()) ok = false;
    for (const CyclicBoxPerm& c : cbps)
      if (psi(psi_inv(c)) != c) ok = false;
  }
  report(5, "psi is a neighbor-preserving bijection with inverse, |A| <= 6", ok);
}

TEST_CASE("6: the cluster extension for sizes <= 6") {
  bool ok = true;
  for (int n = 0; n <= 6 && ok; ++n) {
    std::set<std::string> images;
    long long wl = 0;
    for_each_cluster_perm(n, [&](const ClusterPerm& cp) {
      if (!is_wlpp(cp)) return true;
      ++wl;
      const Ocp o = Phi(cp);
      images.insert(o.str());
      if (o.order() != cp.order()) ok = false;
      if (Phi_inv(o) != cp) ok = false;
      const std::set<Cluster> in(cp.clusters().begin(), cp.clusters().end());
      for (const auto& cyc : o.cycles())
        for (const auto& c : cyc)
          if (!in.count(c) && !in.count(reversed_cluster(c))) ok = false;
      return ok;
    });
    if (ok && images.size() != static_cast<size_t>(wl)) ok = false;
    if (ok && images.size() != enumerate_ocps(n).size()) ok = false;
    if (!ok) break;
    for_each_in_class({PermClass::Ballot}, n, [&](const Permutation& p) {
      if (Phi(ClusterPerm::singletons(p)) != Ocp::singletons(Psi(p))) ok = false;
      return ok;
    });
  }
  report(6, "Phi bijective, order-preserving, cluster condition, restricts to Psi",
         ok);
}

TEST_CASE("7: EGF counts and the cluster-cycle formula") {
  bool ok = true;
  const auto s = series_coefficients(SeriesKind::OcpEgf, 8);
  for (int n = 0; n <= 7 && ok; ++n) {
    std::map<int, BigInt> ocp_by_order, wl_by_order;
    for (const Ocp& o : enumerate_ocps(n)) ++ocp_by_order[o.order()];
    for_each_cluster_perm(n, [&](const ClusterPerm& cp) {
      if (is_wlpp(cp)) ++wl_by_order[cp.order()];
      return true;
    });
    if (ocp_by_order != wl_by_order) ok = false;
    for (int k = 0; k <= n; ++k) {
      BigInt expect = 0;
      if (auto it = ocp_by_order.find(k); it != ocp_by_order.end())
        expect = it->second;
      if (n == 0 && k == 0) expect = 1;
      if (s.count(n, k) != expect) ok = false;
    }
  }
  for (int n = 1; n <= 6 && ok; ++n) {
    std::vector<int> support(n);
    for (int i = 0; i < n; ++i) support[i] = i + 1;
    const auto cycles = enumerate_single_cluster_cycles(support);
    for (int k = 0; 2 * k + 1 <= n; ++k) {
      BigInt brute = 0;
      for (const auto& c : cycles)
        if (static_cast<int>(c.size()) == 2 * k + 1) ++brute;
      if (brute != count_cluster_cycles(n, k)) ok = false;
    }
  }
  report(7, "n![t^k z^n] sqrt EGF = |OC_{n,k}| = |P_{n,k}| (n <= 7); cycle formula (n <= 6)",
         ok);
}

TEST_CASE("8: pattern table rows by brute filtering") {
  struct Row {
    const char* pattern;
    std::vector<long long> values;
    int limit;
  };
  const std::vector<Row> rows = {
      {"123", {1, 1, 2, 2, 5, 5, 14, 14, 42, 42}, 10},
      {"321", {1, 1, 3, 9, 28, 90, 297, 1001, 3432}, 9},
      {"132", {1, 1, 2, 4, 10, 25, 70, 196, 588}, 9},
      {"231", {1, 1, 2, 4, 10, 25, 70, 196, 588}, 9},
      {"213", {1, 1, 3, 6, 21, 52, 193, 532, 2034}, 9},
      {"312", {1, 1, 3, 6, 21, 52, 193, 532, 2034}, 9}};
  bool ok = true;
  for (const Row& row : rows) {
    const Pattern pat = Pattern::parse(row.pattern);
    for (int n = 1; n <= row.limit; ++n)
      if (avoid_count({PermClass::Ballot}, n, pat) != BigInt(row.values[n - 1]))
        ok = false;
  }
  for (int n = 1; n <= 10 && ok; ++n)
    if (avoid_count({PermClass::Ballot}, n, Pattern::parse("123")) !=
        catalan((n + 1) / 2))
      ok = false;
  for (int n = 2; n <= 9 && ok; ++n) {
    BigInt binom = 1;
    for (int i = 1; i <= n - 2; ++i) binom = binom * (2 * n - 2 - i + 1) / i;
    if (avoid_count({PermClass::Ballot}, n, Pattern::parse("321")) !=
        3 * binom / (n + 1))
      ok = false;
  }
  for (int n = 1; n <= 9 && ok; ++n)
    if (avoid_count({PermClass::Ballot}, n, Pattern::parse("132")) !=
        catalan(n / 2) * catalan((n + 1) / 2))
      ok = false;
  report(8, "all six table rows with closed forms, brute filtered", ok);
}

TEST_CASE("9: 213-avoiders vs gessel walks") {
  bool ok = true;
  const int N = 12, M = 12;
  const auto E = RecurrenceTable::build(RecurrenceId::E, N, M);
  const auto EA = RecurrenceTable::build(RecurrenceId::EAlt, N, M);
  const auto F = CountTable::build(WalkKind::Gessel, N, M, WalkMethod::Recurrence);
  const auto Fdp = CountTable::build(WalkKind::Gessel, N, M, WalkMethod::StepDp);
  const auto Fbr = CountTable::build(WalkKind::Gessel, N, M, WalkMethod::Brute);
  for (int n = 0; n <= N && ok; ++n)
    for (int h = 0; h <= M && ok; ++h)
      for (int b = 0; b <= M && ok; ++b) {
        const BigInt& e = E.at(n, h, b);
        if (e != EA.at(n, h, b) || e != F.at(n, h, b) || e != Fdp.at(n, h, b) ||
            e != Fbr.at(n, h, b))
          ok = false;
      }
  for (int n = 0; n <= 8 && ok; ++n) {
    BigInt axis = 0;
    for (int j = 0; j <= N + 1; ++j) axis += F.at(n, 0, j);
    if (avoid_count({PermClass::Ballot}, n + 1, Pattern::parse("213")) != axis)
      ok = false;
  }
  for (int n = 0; n <= 8 && ok; ++n) {
    const auto counts = hb_avoider_counts(n, Pattern::parse("213"), 4);
    for (int h = 0; h <= 4; ++h)
      for (int b = 0; b <= 4; ++b)
        if (counts[h][b] != E.at(n, h, b)) ok = false;
  }
  report(9, "E = E_alt = F (= step DP = brute), n,h,b <= 12; filtered counts; axis sum",
         ok);
}

TEST_CASE("10: 231-avoiders vs GB walks") {
  bool ok = true;
  const int N = 12, M = 12;
  const auto G = RecurrenceTable::build(RecurrenceId::G, N, M);
  const auto H = CountTable::build(WalkKind::GB, N, M, WalkMethod::Recurrence);
  const auto Hdp = CountTable::build(WalkKind::GB, N, M, WalkMethod::StepDp);
  const auto Hbr = CountTable::build(WalkKind::GB, N, M, WalkMethod::Brute);
  for (int n = 0; n <= N && ok; ++n)
    for (int h = 0; h <= M && ok; ++h)
      for (int b = 0; b <= M && ok; ++b) {
        const BigInt& g = G.at(n, h, b);
        if (g != H.at(n, h, b) || g != Hdp.at(n, h, b) || g != Hbr.at(n, h, b))
          ok = false;
      }
  for (int n = 1; n <= 10 && ok; ++n)
    if (count_walks_axis_total(WalkKind::GB, n, {0, 0}, WalkMethod::StepDp) !=
        catalan((n + 1) / 2) * catalan((n + 2) / 2))
      ok = false;
  for (int n = 0; n <= 8 && ok; ++n) {
    const auto counts = hb_avoider_counts(n, Pattern::parse("231"), 4);
    for (int h = 0; h <= 4; ++h)
      for (int b = 0; b <= 4; ++b)
        if (counts[h][b] != G.at(n, h, b)) ok = false;
  }
  report(10, "G = H (= step DP = brute), n,h,b <= 12; filtered counts; axis totals",
         ok);
}

TEST_CASE("11: the hypergeometric closed form") {
  bool ok = true;
  for (int n = 0; n <= 8 && ok; ++n) {
    if (denominator(gessel_closed_form_rational(n)) != 1) ok = false;
    if (gessel_closed_form(n) !=
        count_walks(WalkKind::Gessel, 2 * n, {0, 0}, {0, 0}, WalkMethod::StepDp))
      ok = false;
  }
  ok = ok && gessel_closed_form(0) == 1 && gessel_closed_form(1) == 2 &&
       gessel_closed_form(2) == 11;
  // length convention: 213-avoiding dyck words of length 2n+1
  for (int n = 0; n <= 4 && ok; ++n)
    if (avoid_count({PermClass::Dyck}, 2 * n + 1, Pattern::parse("213")) !=
        gessel_closed_form(n))
      ok = false;
  report(11, "closed form integral, = 2n-step walk count, = dyck 213-avoiders", ok);
}

TEST_CASE("12: wilf maps") {
  bool ok = true;
  const Pattern p213 = Pattern::parse("213"), p312 = Pattern::parse("312");
  const Pattern p132 = Pattern::parse("132"), p231 = Pattern::parse("231");
  for (int n = 1; n <= 8 && ok; ++n) {
    std::set<std::string> img1, img2;
    long long s1 = 0, s2 = 0;
    for_each_in_class({PermClass::All}, n, [&](const Permutation& p) {
      if (!contains(p, p213)) {
        ++s1;
        const Permutation q = wilf_map(WilfMap::Varphi213To312, p);
        if (contains(q, p312)) ok = false;
        if (descent_positions(p) != descent_positions(q)) ok = false;
        img1.insert(q.str());
      }
      if (!contains(p, p132)) {
        ++s2;
        const Permutation q = wilf_map(WilfMap::Eta132To231, p);
        if (contains(q, p231)) ok = false;
        if (descent_positions(p) != descent_positions(q)) ok = false;
        img2.insert(q.str());
      }
      return ok;
    });
    if (static_cast<long long>(img1.size()) != s1) ok = false;
    if (static_cast<long long>(img2.size()) != s2) ok = false;
  }
  for (int n = 1; n <= 10 && ok; ++n) {
    if (avoid_count({PermClass::Ballot}, n, p213) !=
        avoid_count({PermClass::Ballot}, n, p312))
      ok = false;
    if (avoid_count({PermClass::Ballot}, n, p132) !=
        avoid_count({PermClass::Ballot}, n, p231))
      ok = false;
  }
  report(12, "wilf maps bijective and descent-preserving; equal ballot rows", ok);
}

int main(int argc, char** argv) {
  doctest::Context ctx(argc, argv);
  const int rc = ctx.run();
  std::printf("acceptance: %d passed, %d failed\n", g_pass, g_fail);
  return rc;
}
