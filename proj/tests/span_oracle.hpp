#pragma once

// Test-side oracle: maximal Motzkin spans by exhaustive span checking,
// independent of the production scan.

#include <algorithm>
#include <set>
#include <vector>

#include "ballot/clusters.hpp"
#include "engine.hpp"

namespace oracle {

using ballot::Cluster;
using ballot::engine::Entries;
using ballot::engine::Span;

inline int letters_in(const Entries& e, int s, int l, bool cyclic) {
  const int k = static_cast<int>(e.size());
  int total = 0;
  for (int j = 0; j < l; ++j)
    total += static_cast<int>(e[cyclic ? (s + j) % k : s + j].size());
  return total;
}

inline bool motzkin_span(const Entries& e, int s, int l, bool cyclic) {
  const int k = static_cast<int>(e.size());
  if (letters_in(e, s, l, cyclic) < 2) return false;
  int h = 0, mn = 0, last = 0;
  for (int j = 0; j + 1 < l; ++j) {
    const Cluster& a = e[cyclic ? (s + j) % k : s + j];
    const Cluster& b = e[cyclic ? (s + j + 1) % k : s + j + 1];
    h += a.back() < b.front() ? 1 : -1;
    mn = std::min(mn, h);
    last = h;
  }
  return last == 0 && mn == 0;
}

inline std::vector<Span> maximal_spans_linear(const Entries& e) {
  const int m = static_cast<int>(e.size());
  std::vector<Span> cand;
  for (int s = 0; s < m; ++s)
    for (int l = 1; s + l <= m; ++l)
      if (motzkin_span(e, s, l, false)) cand.push_back({s, l});
  std::vector<Span> out;
  for (const Span& a : cand) {
    bool contained = false;
    for (const Span& b : cand)
      if ((b.begin < a.begin || (b.begin == a.begin && b.len > a.len)) &&
          b.begin <= a.begin && a.begin + a.len <= b.begin + b.len)
        contained = true;
    if (!contained) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Span> maximal_spans_cyclic(const Entries& e) {
  const int k = static_cast<int>(e.size());
  std::vector<Span> cand;
  for (int s = 0; s < k; ++s)
    for (int l = 1; l <= k; ++l)
      if (motzkin_span(e, s, l, true)) cand.push_back({s, l});
  auto positions = [&](const Span& sp) {
    std::set<int> out;
    for (int j = 0; j < sp.len; ++j) out.insert((sp.begin + j) % k);
    return out;
  };
  std::vector<Span> out;
  for (const Span& a : cand) {
    const auto pa = positions(a);
    bool contained = false;
    for (const Span& b : cand) {
      if (b == a) continue;
      const auto pb = positions(b);
      if (pb.size() >= pa.size() &&
          std::includes(pb.begin(), pb.end(), pa.begin(), pa.end()) && pb != pa)
        contained = true;
      if (pb == pa && b.len > a.len) contained = true;
    }
    if (!contained) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
