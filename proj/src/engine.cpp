#include "engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "ballot/boxperm.hpp"

namespace ballot::engine {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

Entries reversed_word(const Entries& w) {
  Entries out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Cluster(it->rbegin(), it->rend()));
  return out;
}

}  // namespace

std::vector<int> steps_linear(const Entries& e) {
  std::vector<int> s;
  s.reserve(e.empty() ? 0 : e.size() - 1);
  for (size_t i = 0; i + 1 < e.size(); ++i)
    s.push_back(e[i].back() < e[i + 1].front() ? 1 : -1);
  return s;
}

std::vector<int> steps_cyclic(const Entries& e) {
  const size_t k = e.size();
  std::vector<int> s(k);
  for (size_t i = 0; i < k; ++i)
    s[i] = e[i].back() < e[(i + 1) % k].front() ? 1 : -1;
  return s;
}

std::vector<Span> motzkin_spans_linear(const Entries& e) {
  const int m = static_cast<int>(e.size());
  std::vector<Span> spans;
  int base = 0;
  while (m - base > 1) {
    const int len = m - base;
    std::vector<int> h(len, 0);
    std::vector<int> st(len - 1);
    for (int i = 0; i + 1 < len; ++i) {
      st[i] = e[base + i].back() < e[base + i + 1].front() ? 1 : -1;
      h[i + 1] = h[i] + st[i];
    }
    int minh = std::numeric_limits<int>::max();
    int db = -1;  // right-most descent bottom with minimum height
    for (int i = 1; i < len; ++i)
      if (st[i - 1] == -1 && h[i] <= minh) {
        if (h[i] < minh || i > db) db = i;
        minh = std::min(minh, h[i]);
      }
    if (db < 0) break;  // suffix is ascent-only
    int ab = -1;  // left-most ascent bottom at that height
    for (int i = 0; i + 1 < len; ++i)
      if (st[i] == 1 && h[i] == minh) {
        ab = i;
        break;
      }
    require(ab >= 0 && ab < db, "factor scan: no matching ascent bottom");
    spans.push_back({base + ab, db - ab + 1});
    base += db + 1;
  }
  std::vector<char> covered(m, 0);
  for (const Span& s : spans)
    for (int j = 0; j < s.len; ++j) covered[s.begin + j] = 1;
  for (int i = 0; i < m; ++i)
    if (!covered[i] && e[i].size() >= 2) spans.push_back({i, 1});
  std::sort(spans.begin(), spans.end());
  return spans;
}

namespace {

// Factor ends for the factor containing peak entry p of the cycle; returns
// the span in original cycle coordinates.
Span peak_factor_span(const std::vector<int>& cycle_steps, int p) {
  const int k = static_cast<int>(cycle_steps.size());
  // rotation: entry j of the rotated cycle (1-based) is original (p + j - 1) % k;
  // t[j] = step from rotated entry j+1 to j+2 (0-based j).
  std::vector<int> t(k);
  for (int j = 0; j < k; ++j) t[j] = cycle_steps[(p + j) % k];
  // hplus[i], hminus[i] for 1-based i: relative height of rotated entry i
  // walking clockwise / counterclockwise from entry 1.
  std::vector<int> hplus(k + 1, 0), hminus(k + 1, 0);
  for (int i = 2; i <= k; ++i) hplus[i] = hplus[i - 1] + t[i - 2];
  int acc = 0;
  for (int i = k; i >= 1; --i) {
    acc -= t[i - 1];
    hminus[i] = acc;
  }
  int l = -1, r = -1;
  if (hplus[k] >= 0) {
    int mn = std::numeric_limits<int>::max();
    for (int i = 2; i <= k - 1; ++i) mn = std::min(mn, hplus[i]);
    for (int i = k - 1; i >= 2; --i)
      if (hplus[i] == mn) {
        r = i;
        break;
      }
    for (int cand = r + 1; cand <= k; ++cand) {
      if (hminus[cand] != hplus[r]) continue;
      int tail_min = std::numeric_limits<int>::max();
      for (int i = cand; i <= k; ++i) tail_min = std::min(tail_min, hminus[i]);
      if (hminus[cand] == tail_min) {
        l = cand;
        break;
      }
    }
  } else {
    int mn = std::numeric_limits<int>::max();
    for (int i = 3; i <= k; ++i) mn = std::min(mn, hminus[i]);
    for (int i = 3; i <= k; ++i)
      if (hminus[i] == mn) {
        l = i;
        break;
      }
    for (int cand = l - 1; cand >= 2; --cand) {
      if (hplus[cand] != hminus[l]) continue;
      int head_min = std::numeric_limits<int>::max();
      for (int i = 2; i <= cand; ++i) head_min = std::min(head_min, hplus[i]);
      if (hplus[cand] == head_min) {
        r = cand;
        break;
      }
    }
  }
  require(l >= 2 && r >= 2 && l <= k, "cyclic factor scan: no factor ends");
  // factor = rotated entries l..k, 1..r
  return {(p + l - 1) % k, (k - l + 1) + r};
}

}  // namespace

std::vector<Span> motzkin_spans_cyclic(const Entries& e) {
  const int k = static_cast<int>(e.size());
  if (k == 1) {
    if (e[0].size() >= 2) return {{0, 1}};
    return {};
  }
  const std::vector<int> st = steps_cyclic(e);
  std::vector<int> peak_entries;
  for (int i = 0; i < k; ++i)
    if (st[(i - 1 + k) % k] == 1 && st[i] == -1) peak_entries.push_back(i);
  // decreasing peak value; factors of distinct peaks either coincide or are
  // disjoint, so covered peaks are skipped
  std::sort(peak_entries.begin(), peak_entries.end(), [&](int a, int b) {
    return *std::max_element(e[a].begin(), e[a].end()) >
           *std::max_element(e[b].begin(), e[b].end());
  });
  std::vector<Span> spans;
  std::vector<char> covered(k, 0);
  for (int p : peak_entries) {
    if (covered[p]) continue;
    Span s = peak_factor_span(st, p);
    for (int j = 0; j < s.len; ++j) {
      require(!covered[(s.begin + j) % k], "overlapping cyclic factors");
      covered[(s.begin + j) % k] = 1;
    }
    spans.push_back(s);
  }
  for (int i = 0; i < k; ++i)
    if (!covered[i] && e[i].size() >= 2) spans.push_back({i, 1});
  std::sort(spans.begin(), spans.end());
  return spans;
}

LinearDecomp decompose_linear(const Entries& e) {
  LinearDecomp out;
  out.spans = motzkin_spans_linear(e);
  std::map<int, int> span_at;  // begin -> len
  for (const Span& s : out.spans) span_at[s.begin] = s.len;
  int i = 0;
  const int m = static_cast<int>(e.size());
  while (i < m) {
    auto it = span_at.find(i);
    if (it != span_at.end()) {
      Entries fac(e.begin() + i, e.begin() + i + it->second);
      out.skeleton.push_back(fac.front().front());
      out.skeleton.push_back(kBox);
      out.skeleton.push_back(fac.back().back());
      out.factors.push_back(std::move(fac));
      i += it->second;
    } else {
      require(e[i].size() == 1, "uncovered multi-letter entry in skeleton");
      out.skeleton.push_back(e[i].front());
      ++i;
    }
  }
  return out;
}

CyclicDecomp decompose_cyclic(const std::vector<Entries>& cycles) {
  CyclicDecomp out;
  for (size_t ci = 0; ci < cycles.size(); ++ci) {
    const Entries& e = cycles[ci];
    const int k = static_cast<int>(e.size());
    std::vector<Span> spans = motzkin_spans_cyclic(e);
    std::map<int, int> span_at;
    for (const Span& s : spans) span_at[s.begin] = s.len;
    std::vector<int> skel;
    const int start = spans.empty() ? 0 : spans.front().begin;
    int done = 0, i = start;
    while (done < k) {
      auto it = span_at.find(i);
      if (it != span_at.end()) {
        Entries fac;
        for (int j = 0; j < it->second; ++j) fac.push_back(e[(i + j) % k]);
        skel.push_back(fac.front().front());
        skel.push_back(kBox);
        skel.push_back(fac.back().back());
        out.spans.push_back({i, it->second});
        out.factor_cycle.push_back(static_cast<int>(ci));
        out.factors.push_back(std::move(fac));
        done += it->second;
        i = (i + it->second) % k;
      } else {
        require(e[i].size() == 1, "uncovered multi-letter entry in cycle skeleton");
        skel.push_back(e[i].front());
        ++done;
        i = (i + 1) % k;
      }
    }
    out.skeleton_cycles.push_back(std::move(skel));
  }
  return out;
}

namespace {

struct FactorIndex {
  std::map<std::pair<int, int>, const Entries*> by_pair;

  explicit FactorIndex(const std::vector<Entries>& factors) {
    for (const Entries& f : factors) {
      int a = f.front().front(), c = f.back().back();
      require(a != c, "factor boundaries must be distinct letters");
      const std::pair<int, int> key = std::minmax(a, c);
      require(by_pair.emplace(key, &f).second, "duplicate factor boundary pair");
    }
  }

  // oriented so the result starts with letter `first`
  Entries oriented(int first, int last) const {
    auto it = by_pair.find(std::minmax(first, last));
    require(it != by_pair.end(), "unmatched boundary pair");
    const Entries& f = *it->second;
    if (f.front().front() == first && f.back().back() == last) return f;
    require(f.front().front() == last && f.back().back() == first,
            "factor boundaries disagree with flanking letters");
    return reversed_word(f);
  }
};

Entries replace_boxes(const std::vector<int>& skel, bool cyclic,
                      const FactorIndex& index) {
  const int k = static_cast<int>(skel.size());
  Entries out;
  int pos = 0;
  while (pos < k) {
    const int x = skel[pos];
    require(x != kBox, "skeleton scan landed on a box");
    const bool has_next = cyclic || pos + 1 < k;
    if (has_next && skel[(pos + 1) % k] == kBox) {
      const int c = skel[(pos + 2) % k];
      Entries f = index.oriented(x, c);
      for (auto& cl : f) out.push_back(std::move(cl));
      pos += 3;
    } else {
      out.push_back({x});
      pos += 1;
    }
  }
  return out;
}

// Rotate a cyclic skeleton so no (a, box, c) triple wraps past the end:
// position 0 must be a letter whose predecessor is also a letter.
std::vector<int> rotate_for_scan(const std::vector<int>& skel) {
  const int k = static_cast<int>(skel.size());
  for (int i = 0; i < k; ++i)
    if (skel[i] != kBox && skel[(i - 1 + k) % k] != kBox) {
      std::vector<int> out;
      out.reserve(k);
      for (int j = 0; j < k; ++j) out.push_back(skel[(i + j) % k]);
      return out;
    }
  throw std::logic_error("box cycle with no two adjacent letters");
}

}  // namespace

Entries insert_linear(const std::vector<int>& skeleton,
                      const std::vector<Entries>& factors) {
  FactorIndex index(factors);
  return replace_boxes(skeleton, false, index);
}

std::vector<Entries> insert_cyclic(
    const std::vector<std::vector<int>>& skeleton_cycles,
    const std::vector<Entries>& factors) {
  FactorIndex index(factors);
  std::vector<Entries> out;
  out.reserve(skeleton_cycles.size());
  for (const auto& skel : skeleton_cycles) {
    bool boxed = std::find(skel.begin(), skel.end(), kBox) != skel.end();
    if (!boxed) {
      Entries ent;
      for (int x : skel) ent.push_back({x});
      out.push_back(std::move(ent));
      continue;
    }
    out.push_back(replace_boxes(rotate_for_scan(skel), true, index));
  }
  return out;
}

}  // namespace ballot::engine
