#include "ballot/statistics.hpp"

#include <algorithm>

namespace ballot {

StatRecord statistics(const Permutation& p) {
  StatRecord r;
  const auto& w = p.word();
  const int n = p.size();
  for (int i = 0; i + 1 < n; ++i) {
    if (w[i] < w[i + 1])
      ++r.asc;
    else
      ++r.des;
  }
  for (int i = 1; i <= n - 1; ++i)
    if (p.at(i) > i) ++r.exc;
  const CycleSystem cs = CycleSystem::of(p);
  for (const auto& c : cs.cycles()) {
    const int k = static_cast<int>(c.size());
    int casc = 0;
    for (int i = 0; i < k; ++i)
      if (c[i] < c[(i + 1) % k]) ++casc;
    r.exc_tilde += std::min(casc, k - casc);
  }
  return r;
}

PeakRecord peaks(const Permutation& p) {
  PeakRecord r;
  const int n = p.size();
  const auto inv = p.inverse_word();
  for (int k = 3; k <= n; ++k) {
    const int pos = inv[k - 1];
    if (1 < pos && pos < n && p.at(pos - 1) < k && p.at(pos + 1) < k)
      r.peak_set.insert({k, std::minmax(p.at(pos - 1), p.at(pos + 1))});
    if (inv[k - 1] < k && p.at(k) < k)
      r.cpeak_set.insert({k, std::minmax(inv[k - 1], p.at(k))});
  }
  return r;
}

BallotProfile ballot_profile(const Permutation& p, int start_height) {
  BallotProfile out;
  out.end_height = start_height;
  if (p.size() == 0) return out;
  out.heights.reserve(p.size());
  out.heights.push_back(start_height);
  const auto& w = p.word();
  for (int i = 0; i + 1 < p.size(); ++i)
    out.heights.push_back(out.heights.back() + (w[i] < w[i + 1] ? 1 : -1));
  out.end_height = out.heights.back();
  out.is_ballot = *std::min_element(out.heights.begin(), out.heights.end()) >= 0 &&
                  start_height >= 0;
  return out;
}

bool is_ballot(const Permutation& p) { return ballot_profile(p).is_ballot; }

bool is_dyck(const Permutation& p) {
  if (p.size() % 2 == 0) return false;
  const auto prof = ballot_profile(p);
  return prof.is_ballot && prof.end_height == 0;
}

bool is_hb_ballot(const Permutation& p, int h, int b) {
  const auto prof = ballot_profile(p, h);
  return prof.is_ballot && prof.end_height == b;
}

bool is_odd_order(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(n + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    int len = 0, x = s;
    while (!seen[x]) {
      seen[x] = 1;
      ++len;
      x = p.at(x);
    }
    if (len % 2 == 0) return false;
  }
  return true;
}

}  // namespace ballot
