#include "ballot/clusters.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ballot/boxperm.hpp"
#include "ballot/statistics.hpp"
#include "engine.hpp"

namespace ballot {

namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void validate_partition(const std::vector<const Cluster*>& clusters, int* n_out) {
  std::vector<int> all;
  for (const Cluster* c : clusters) {
    check(!c->empty(), "empty cluster");
    for (int x : *c) {
      check(x >= 1, "letters must be positive");
      all.push_back(x);
    }
  }
  std::sort(all.begin(), all.end());
  const int n = all.empty() ? 0 : all.back();
  check(static_cast<int>(all.size()) == n, "letters must partition 1..n");
  for (int i = 0; i < n; ++i) check(all[i] == i + 1, "letters must partition 1..n");
  *n_out = n;
}

std::string cluster_str(const Cluster& c) {
  if (c.size() == 1) return std::to_string(c.front());
  std::string out = "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c[i]);
  }
  return out + "]";
}

// tokens: bare integers are singletons, "[a b]" groups a cluster
std::vector<Cluster> parse_clusters(std::string_view text) {
  std::vector<Cluster> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] == '[') {
      const size_t close = text.find(']', i);
      check(close != std::string_view::npos, "missing ']'");
      std::istringstream in{std::string(text.substr(i + 1, close - i - 1))};
      Cluster c;
      int v;
      while (in >> v) c.push_back(v);
      check(!c.empty(), "empty cluster brackets");
      out.push_back(std::move(c));
      i = close + 1;
    } else {
      size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != '[')
        ++j;
      out.push_back({std::stoi(std::string(text.substr(i, j - i)))});
      i = j;
    }
    skip_ws();
  }
  return out;
}

int min_of_cluster(const Cluster& c) { return *std::min_element(c.begin(), c.end()); }

}  // namespace

Cluster reversed_cluster(const Cluster& c) { return {c.rbegin(), c.rend()}; }

ClusterPerm ClusterPerm::from_clusters(std::vector<Cluster> clusters) {
  int n = 0;
  std::vector<const Cluster*> ptrs;
  for (const auto& c : clusters) ptrs.push_back(&c);
  validate_partition(ptrs, &n);
  ClusterPerm cp;
  cp.clusters_ = std::move(clusters);
  return cp;
}

ClusterPerm ClusterPerm::singletons(const Permutation& p) {
  std::vector<Cluster> cs;
  cs.reserve(p.size());
  for (int x : p.word()) cs.push_back({x});
  return from_clusters(std::move(cs));
}

ClusterPerm ClusterPerm::parse(std::string_view text) {
  return from_clusters(parse_clusters(text));
}

int ClusterPerm::size() const {
  int n = 0;
  for (const auto& c : clusters_) n += static_cast<int>(c.size());
  return n;
}

Permutation ClusterPerm::flatten() const {
  std::vector<int> w;
  for (const auto& c : clusters_) w.insert(w.end(), c.begin(), c.end());
  return Permutation::from_word(std::move(w));
}

std::string ClusterPerm::str() const {
  std::string out;
  for (size_t i = 0; i < clusters_.size(); ++i) {
    if (i) out += ' ';
    out += cluster_str(clusters_[i]);
  }
  return out;
}

std::vector<int> cluster_heights(const ClusterPerm& cp, int start_height) {
  const auto& cs = cp.clusters();
  std::vector<int> h;
  if (cs.empty()) return h;
  h.push_back(start_height);
  for (size_t i = 0; i + 1 < cs.size(); ++i)
    h.push_back(h.back() + (cs[i].back() < cs[i + 1].front() ? 1 : -1));
  return h;
}

bool is_wlpp(const ClusterPerm& cp) {
  const auto h = cluster_heights(cp);
  return std::all_of(h.begin(), h.end(), [](int x) { return x >= 0; });
}

Ocp Ocp::from_cycles(std::vector<std::vector<Cluster>> cycles) {
  int n = 0;
  std::vector<const Cluster*> ptrs;
  for (const auto& cyc : cycles) {
    check(cyc.size() % 2 == 1, "cluster cycle order must be odd");
    for (const auto& c : cyc) ptrs.push_back(&c);
  }
  validate_partition(ptrs, &n);
  for (auto& cyc : cycles) {
    int best = 0;
    for (size_t i = 1; i < cyc.size(); ++i)
      if (min_of_cluster(cyc[i]) < min_of_cluster(cyc[best]))
        best = static_cast<int>(i);
    std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) {
              return min_of_cluster(a.front()) < min_of_cluster(b.front());
            });
  Ocp o;
  o.cycles_ = std::move(cycles);
  o.n_ = n;
  return o;
}

Ocp Ocp::singletons(const CycleSystem& cs) {
  std::vector<std::vector<Cluster>> cycles;
  for (const auto& c : cs.cycles()) {
    std::vector<Cluster> cyc;
    for (int x : c) cyc.push_back({x});
    cycles.push_back(std::move(cyc));
  }
  return from_cycles(std::move(cycles));
}

Ocp Ocp::parse(std::string_view text) {
  std::vector<std::vector<Cluster>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    check(text[i] == '(', "expected '('");
    const size_t close = text.find(')', i);
    check(close != std::string_view::npos, "missing ')'");
    cycles.push_back(parse_clusters(text.substr(i + 1, close - i - 1)));
    i = close + 1;
    skip_ws();
  }
  return from_cycles(std::move(cycles));
}

int Ocp::size() const { return n_; }

int Ocp::order() const {
  int k = 0;
  for (const auto& c : cycles_) k += static_cast<int>(c.size());
  return k;
}

CycleSystem Ocp::to_cycle_system() const {
  std::vector<std::vector<int>> out;
  for (const auto& cyc : cycles_) {
    std::vector<int> c;
    for (const auto& cl : cyc) {
      check(cl.size() == 1, "cycle system requires singleton clusters");
      c.push_back(cl.front());
    }
    out.push_back(std::move(c));
  }
  return CycleSystem::from_cycles(std::move(out));
}

std::string Ocp::str() const {
  std::string out;
  for (const auto& cyc : cycles_) {
    out += '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += cluster_str(cyc[i]);
    }
    out += ')';
  }
  return out;
}

Ocp Phi(const ClusterPerm& cp) {
  if (!is_wlpp(cp)) throw std::invalid_argument("Phi: not a well-labelled positive path");
  const auto d = engine::decompose_linear(cp.clusters());
  const CyclicBoxPerm boxed = psi(BoxWord::from_letters(d.skeleton));
  std::vector<std::vector<int>> raw;
  for (const auto& c : boxed.cycles()) raw.push_back(c.letters());
  return Ocp::from_cycles(engine::insert_cyclic(raw, d.factors));
}

ClusterPerm Phi_inv(const Ocp& ocp) {
  const auto d = engine::decompose_cyclic(ocp.cycles());
  std::vector<BoxCycle> skel;
  for (const auto& sc : d.skeleton_cycles) skel.push_back(BoxCycle::from_letters(sc));
  const BoxWord w = psi_inv(CyclicBoxPerm::from_cycles(std::move(skel)));
  ClusterPerm out =
      ClusterPerm::from_clusters(engine::insert_linear(w.letters(), d.factors));
  if (!is_wlpp(out)) throw std::logic_error("Phi_inv produced an invalid path");
  return out;
}

BigInt count_cluster_cycles(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 0 || 2 * k + 1 > n) throw std::invalid_argument("k out of range");
  BigInt binom = 1;
  for (int i = 1; i <= 2 * k + 1; ++i) binom = binom * (n - i + 1) / i;
  BigInt fact = 1;
  for (int i = 2; i <= n - 1; ++i) fact *= i;
  return binom * fact;
}

namespace {

BigInt double_factorial(int m) {
  // (-1)!! = 0!! = 1
  BigInt r = 1;
  for (int i = m; i >= 2; i -= 2) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
  return r;
}

}  // namespace

BigInt count_wlpp_horizontal(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range");
  BigInt fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  const BigInt common = binomial(n, k) * binomial(n - 1, k) * fact;
  if ((n - k) % 2 == 0) {
    const BigInt d = double_factorial(n - k - 1);
    return common * d * d;
  }
  return common * double_factorial(n - k) * double_factorial(n - k - 2);
}

void for_each_cluster_perm(int n, const std::function<bool(const ClusterPerm&)>& visit) {
  if (n == 0) {
    visit(ClusterPerm());
    return;
  }
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<Cluster> cs;
      Cluster cur{w[0]};
      for (int i = 0; i + 1 < n; ++i) {
        if ((mask >> i) & 1) {
          cur.push_back(w[i + 1]);
        } else {
          cs.push_back(std::move(cur));
          cur = {w[i + 1]};
        }
      }
      cs.push_back(std::move(cur));
      if (!visit(ClusterPerm::from_clusters(std::move(cs)))) return;
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<std::vector<Cluster>> enumerate_single_cluster_cycles(
    const std::vector<int>& support) {
  std::vector<int> S = support;
  std::sort(S.begin(), S.end());
  const int m = static_cast<int>(S.size());
  std::set<std::vector<Cluster>> out;
  std::vector<int> w = S;
  do {
    for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
      std::vector<Cluster> cyc;
      Cluster cur{w[0]};
      for (int i = 0; i + 1 < m; ++i) {
        if ((mask >> i) & 1) {
          cur.push_back(w[i + 1]);
        } else {
          cyc.push_back(std::move(cur));
          cur = {w[i + 1]};
        }
      }
      cyc.push_back(std::move(cur));
      if (cyc.size() % 2 == 0) continue;
      int best = 0;
      for (size_t i = 1; i < cyc.size(); ++i)
        if (min_of_cluster(cyc[i]) < min_of_cluster(cyc[best]))
          best = static_cast<int>(i);
      std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
      out.insert(cyc);
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return {out.begin(), out.end()};
}

namespace {

void ocp_rec(const std::vector<int>& remaining, std::vector<std::vector<Cluster>>& acc,
             std::vector<Ocp>& out) {
  if (remaining.empty()) {
    out.push_back(Ocp::from_cycles(acc));
    return;
  }
  const int m = static_cast<int>(remaining.size());
  for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
    std::vector<int> blk{remaining[0]}, rest;
    for (int i = 1; i < m; ++i)
      ((mask >> (i - 1)) & 1 ? blk : rest).push_back(remaining[i]);
    for (auto& cyc : enumerate_single_cluster_cycles(blk)) {
      acc.push_back(cyc);
      ocp_rec(rest, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<Ocp> enumerate_ocps(int n) {
  std::vector<Ocp> out;
  if (n == 0) {
    out.push_back(Ocp());
    return out;
  }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::vector<std::vector<Cluster>> acc;
  ocp_rec(all, acc, out);
  return out;
}

}  // namespace ballot
