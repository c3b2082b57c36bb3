#include "ballot/boxperm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ballot {

namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<std::vector<int>> segments(const std::vector<int>& letters) {
  std::vector<std::vector<int>> segs{{}};
  for (int x : letters) {
    if (x == kBox)
      segs.emplace_back();
    else
      segs.back().push_back(x);
  }
  return segs;
}

bool increasing(const std::vector<int>& v) {
  return std::is_sorted(v.begin(), v.end()) &&
         std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::vector<int> parse_box_tokens(std::string_view text) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "#") {
      letters.push_back(kBox);
    } else {
      size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad token: " + tok);
      letters.push_back(v);
    }
  }
  return letters;
}

std::string box_tokens_str(const std::vector<int>& letters) {
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += letters[i] == kBox ? "#" : std::to_string(letters[i]);
  }
  return out;
}

int min_letter(const std::vector<int>& letters) {
  int m = 0;
  for (int x : letters)
    if (x != kBox && (m == 0 || x < m)) m = x;
  return m;
}

}  // namespace

BoxWord BoxWord::from_letters(std::vector<int> letters) {
  std::vector<int> ints;
  for (int x : letters) {
    check(x >= 0, "negative letter");
    if (x != kBox) ints.push_back(x);
  }
  std::vector<int> sorted_ints = ints;
  std::sort(sorted_ints.begin(), sorted_ints.end());
  check(std::adjacent_find(sorted_ints.begin(), sorted_ints.end()) ==
            sorted_ints.end(),
        "repeated integer letter");
  const auto segs = segments(letters);
  if (segs.size() == 1) {
    check(increasing(letters), "box-free word must be increasing");
  } else {
    check(!segs.front().empty() && !segs.back().empty(),
          "word may not start or end with a box");
    for (size_t i = 1; i + 1 < segs.size(); ++i)
      check(segs[i].size() >= 2, "segment between boxes needs length >= 2");
    for (const auto& s : segs) check(increasing(s), "segment not increasing");
  }
  BoxWord w;
  w.letters_ = std::move(letters);
  return w;
}

BoxWord BoxWord::parse(std::string_view text) {
  return from_letters(parse_box_tokens(text));
}

int BoxWord::box_count() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), kBox));
}

std::vector<int> BoxWord::support() const {
  std::vector<int> out;
  for (int x : letters_)
    if (x != kBox) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::string BoxWord::str() const { return box_tokens_str(letters_); }

BpClass classify(const BoxWord& w) {
  const auto& v = w.letters();
  check(!v.empty(), "classify requires a nonempty word");
  const int a1 = min_letter(v);
  const int pos = static_cast<int>(std::find(v.begin(), v.end(), a1) - v.begin()) + 1;
  if (pos == 1)
    return (v.size() >= 2 && v[1] == kBox) ? BpClass::BP1 : BpClass::BP2;
  return pos % 2 == 0 ? BpClass::BP1 : BpClass::BP3;
}

BoxWord phi(const BoxWord& w) {
  check(classify(w) == BpClass::BP1, "phi requires a BP1 word");
  std::vector<int> v = w.letters();
  const int a1 = min_letter(v);
  if (v[0] == a1 && v[1] == kBox) {
    // first and third letters swap
    std::swap(v[0], v[2]);
    return BoxWord::from_letters(std::move(v));
  }
  const int n = static_cast<int>(v.size());
  const int j = static_cast<int>(std::find(v.begin(), v.end(), a1) - v.begin());
  int first_box = -1;
  for (int idx = 0; idx < n; ++idx)
    if (v[idx] == kBox) {
      first_box = idx;
      break;
    }
  const int a = v[first_box - 1];
  int k = -1;  // index of x, the left neighbor of the first box right of a1
  for (int idx = j + 1; idx < n; ++idx)
    if (v[idx] == kBox) {
      k = idx - 1;
      break;
    }
  std::vector<int> T;
  for (int idx = 0; idx < first_box - 1; ++idx) T.push_back(v[idx]);
  const int upto = k >= 0 ? k : n;
  for (int idx = j + 1; idx < upto; ++idx) T.push_back(v[idx]);
  const int bound = k >= 0 ? std::min(a, v[k]) : a;
  if (!T.empty() && *std::min_element(T.begin(), T.end()) < bound) {
    const int t = *std::min_element(T.begin(), T.end());
    std::vector<int> out;
    if (v[0] == t) {
      // move the first letter to just after a1
      out.assign(v.begin() + 1, v.begin() + j + 1);
      out.push_back(t);
      out.insert(out.end(), v.begin() + j + 1, v.end());
    } else {
      check(v[j + 1] == t, "min of T must flank the word or follow a1");
      out.push_back(t);
      out.insert(out.end(), v.begin(), v.begin() + j + 1);
      out.insert(out.end(), v.begin() + j + 2, v.end());
    }
    return BoxWord::from_letters(std::move(out));
  }
  if (k == j + 1 && v[k] < v[0]) {
    // a1 is immediately followed by x, box, y: move "y box x" to the front
    const int x = v[k];
    const int y = v[k + 2];
    std::vector<int> out{y, kBox, x};
    out.insert(out.end(), v.begin(), v.begin() + j + 1);
    out.insert(out.end(), v.begin() + k + 3, v.end());
    return BoxWord::from_letters(std::move(out));
  }
  // remaining case: word starts "a box p3"; move "p3 box a" after a1
  check(v[0] == a, "unexpected dispatch in phi");
  const int p3 = v[2];
  std::vector<int> out(v.begin() + 3, v.end());
  const int jj = static_cast<int>(std::find(out.begin(), out.end(), a1) - out.begin());
  out.insert(out.begin() + jj + 1, {p3, kBox, a});
  return BoxWord::from_letters(std::move(out));
}

int phi_inv_case(const BoxWord& w) {
  check(classify(w) == BpClass::BP3, "phi_inv requires a BP3 word");
  const auto& v = w.letters();
  const int n = static_cast<int>(v.size());
  const int a1 = min_letter(v);
  const int P = static_cast<int>(std::find(v.begin(), v.end(), a1) - v.begin()) + 1;
  const int F = v[0];
  const bool hasN = P < n;
  const int N = hasN ? v[P] : 0;
  const bool n_left_of_box = hasN && P + 1 < n && v[P + 1] == kBox;
  if (P == 3 && v[1] == kBox && (n == 3 || (hasN && F < N))) return 1;
  if (P >= 5 && v[1] != kBox && (P == n || (hasN && F < N))) return 2;
  if (P >= 7 && v[1] == kBox && (P == n || (hasN && F < N))) return 3;
  if (P >= 3 && hasN && F > N && !n_left_of_box) return 4;
  if (P >= 3 && hasN && F > N && n_left_of_box) return 5;
  throw std::logic_error("phi_inv: no dispatch case fired");
}

BoxWord phi_inv(const BoxWord& w) {
  std::vector<int> v = w.letters();
  const int a1 = min_letter(v);
  const int P = static_cast<int>(std::find(v.begin(), v.end(), a1) - v.begin()) + 1;
  switch (phi_inv_case(w)) {
    case 1: {
      std::swap(v[0], v[2]);
      return BoxWord::from_letters(std::move(v));
    }
    case 2: {
      // first letter moves back to just after a1
      const int t = v[0];
      std::vector<int> out(v.begin() + 1, v.end());
      const int j = static_cast<int>(std::find(out.begin(), out.end(), a1) - out.begin());
      out.insert(out.begin() + j + 1, t);
      return BoxWord::from_letters(std::move(out));
    }
    case 3: {
      // leading "y box x" moves back to just after a1 as "x box y"
      const int y = v[0], x = v[2];
      std::vector<int> out(v.begin() + 3, v.end());
      const int j = static_cast<int>(std::find(out.begin(), out.end(), a1) - out.begin());
      out.insert(out.begin() + j + 1, {x, kBox, y});
      return BoxWord::from_letters(std::move(out));
    }
    case 4: {
      // right neighbor of a1 moves to the front
      const int t = v[P];
      std::vector<int> out{t};
      out.insert(out.end(), v.begin(), v.begin() + P);
      out.insert(out.end(), v.begin() + P + 1, v.end());
      return BoxWord::from_letters(std::move(out));
    }
    case 5: {
      // "p3 box a" after a1 moves to the front as "a box p3"
      const int p3 = v[P], a = v[P + 2];
      std::vector<int> out{a, kBox, p3};
      out.insert(out.end(), v.begin(), v.begin() + P);
      out.insert(out.end(), v.begin() + P + 3, v.end());
      return BoxWord::from_letters(std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// maximal integer runs of a cyclic sequence, read in stored order
std::vector<std::vector<int>> cyclic_runs(const std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  std::vector<std::vector<int>> runs;
  int first_box = -1;
  for (int i = 0; i < k; ++i)
    if (c[i] == kBox) {
      first_box = i;
      break;
    }
  if (first_box < 0) return runs;
  std::vector<int> cur;
  for (int j = 1; j <= k; ++j) {
    const int x = c[(first_box + j) % k];
    if (x == kBox) {
      runs.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(x);
    }
  }
  return runs;
}

bool runs_increasing(const std::vector<int>& c) {
  for (const auto& r : cyclic_runs(c))
    if (r.size() < 2 || !increasing(r)) return false;
  return true;
}

}  // namespace

BoxCycle BoxCycle::from_letters(std::vector<int> letters) {
  check(!letters.empty(), "empty cycle");
  check(letters.size() % 2 == 1, "box cycle length must be odd");
  std::vector<int> ints;
  for (int x : letters)
    if (x != kBox) ints.push_back(x);
  check(!ints.empty(), "cycle needs at least one integer");
  std::sort(ints.begin(), ints.end());
  check(std::adjacent_find(ints.begin(), ints.end()) == ints.end(),
        "repeated letter in cycle");
  BoxCycle c;
  if (letters.size() == 1) {
    check(letters[0] != kBox, "fixed point cannot be a box");
    c.orientation_ = Orientation::FixedPoint;
    c.letters_ = std::move(letters);
    return c;
  }
  check(std::count(letters.begin(), letters.end(), kBox) >= 1,
        "cycle of length > 1 needs a box");
  const bool fwd = runs_increasing(letters);
  std::vector<int> rev(letters.rbegin(), letters.rend());
  const bool bwd = runs_increasing(rev);
  check(fwd != bwd, "cycle runs must increase in exactly one direction");
  c.orientation_ = fwd ? Orientation::Forward : Orientation::Reverse;
  // canonical rotation: minimum integer letter first
  const int m = min_letter(letters);
  const auto it = std::find(letters.begin(), letters.end(), m);
  std::rotate(letters.begin(), it, letters.end());
  c.letters_ = std::move(letters);
  return c;
}

std::vector<int> BoxCycle::support() const {
  std::vector<int> out;
  for (int x : letters_)
    if (x != kBox) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::string BoxCycle::str() const {
  return "(" + box_tokens_str(letters_) + ")";
}

CyclicBoxPerm CyclicBoxPerm::from_cycles(std::vector<BoxCycle> cycles) {
  std::vector<int> all;
  for (const auto& c : cycles) {
    const auto s = c.support();
    all.insert(all.end(), s.begin(), s.end());
  }
  std::sort(all.begin(), all.end());
  check(std::adjacent_find(all.begin(), all.end()) == all.end(),
        "cycles overlap");
  std::sort(cycles.begin(), cycles.end(),
            [](const BoxCycle& a, const BoxCycle& b) {
              return a.letters().front() < b.letters().front();
            });
  CyclicBoxPerm out;
  out.cycles_ = std::move(cycles);
  return out;
}

CyclicBoxPerm CyclicBoxPerm::parse(std::string_view text) {
  std::vector<BoxCycle> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    check(text[i] == '(', "expected '('");
    const size_t close = text.find(')', i);
    check(close != std::string_view::npos, "missing ')'");
    cycles.push_back(
        BoxCycle::from_letters(parse_box_tokens(text.substr(i + 1, close - i - 1))));
    i = close + 1;
    skip_ws();
  }
  return from_cycles(std::move(cycles));
}

std::vector<int> CyclicBoxPerm::support() const {
  std::vector<int> out;
  for (const auto& c : cycles_) {
    const auto s = c.support();
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string CyclicBoxPerm::str() const {
  std::string out;
  for (const auto& c : cycles_) out += c.str();
  return out;
}

std::vector<NeighborPair> box_neighbor_multiset(const BoxWord& w) {
  std::vector<NeighborPair> out;
  const auto& v = w.letters();
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == kBox) out.push_back(std::minmax(v[i - 1], v[i + 1]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NeighborPair> box_neighbor_multiset(const CyclicBoxPerm& c) {
  std::vector<NeighborPair> out;
  for (const auto& cyc : c.cycles()) {
    const auto& v = cyc.letters();
    const int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i)
      if (v[i] == kBox)
        out.push_back(std::minmax(v[(i - 1 + k) % k], v[(i + 1) % k]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<NeighborPair> box_neighbor_set(const BoxWord& w) {
  const auto m = box_neighbor_multiset(w);
  return {m.begin(), m.end()};
}

std::set<NeighborPair> box_neighbor_set(const CyclicBoxPerm& c) {
  const auto m = box_neighbor_multiset(c);
  return {m.begin(), m.end()};
}

CyclicBoxPerm psi(const BoxWord& w) {
  std::vector<BoxCycle> cycles;
  std::vector<int> cur = w.letters();
  while (!cur.empty()) {
    BoxWord bw = BoxWord::from_letters(cur);
    const int a1 = min_letter(cur);
    switch (classify(bw)) {
      case BpClass::BP2: {
        cycles.push_back(BoxCycle::from_letters({a1}));
        cur.erase(cur.begin());
        break;
      }
      case BpClass::BP3: {
        const int p = static_cast<int>(
            std::find(cur.begin(), cur.end(), a1) - cur.begin());
        std::vector<int> cyc{a1};
        cyc.insert(cyc.end(), cur.begin(), cur.begin() + p);
        cycles.push_back(BoxCycle::from_letters(std::move(cyc)));
        cur.erase(cur.begin(), cur.begin() + p + 1);
        break;
      }
      case BpClass::BP1: {
        std::vector<int> mapped = phi(bw).letters();
        const int p = static_cast<int>(
            std::find(mapped.begin(), mapped.end(), a1) - mapped.begin());
        std::vector<int> cyc{a1};
        for (int i = p - 1; i >= 0; --i) cyc.push_back(mapped[i]);
        cycles.push_back(BoxCycle::from_letters(std::move(cyc)));
        cur.assign(mapped.begin() + p + 1, mapped.end());
        break;
      }
    }
  }
  return CyclicBoxPerm::from_cycles(std::move(cycles));
}

BoxWord psi_inv(const CyclicBoxPerm& c) {
  std::vector<BoxCycle> cycles = c.cycles();
  // recursion on the cycle holding the minimum of the remaining support
  std::function<std::vector<int>(size_t)> rebuild = [&](size_t from) {
    if (from == cycles.size()) return std::vector<int>{};
    // cycles are sorted by minimum letter, so cycles[from] holds the minimum
    const BoxCycle& C = cycles[from];
    std::vector<int> tail = rebuild(from + 1);
    const auto& v = C.letters();  // canonical: minimum letter first
    const int a1 = v.front();
    switch (C.orientation()) {
      case BoxCycle::Orientation::FixedPoint: {
        std::vector<int> out{a1};
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
      }
      case BoxCycle::Orientation::Forward: {
        std::vector<int> out(v.begin() + 1, v.end());
        out.push_back(a1);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
      }
      case BoxCycle::Orientation::Reverse: {
        std::vector<int> out(v.rbegin(), v.rend() - 1);  // ccw from a1
        out.push_back(a1);
        out.insert(out.end(), tail.begin(), tail.end());
        return phi_inv(BoxWord::from_letters(std::move(out))).letters();
      }
    }
    throw std::logic_error("unreachable");
  };
  return BoxWord::from_letters(rebuild(0));
}

namespace {

void bp_segments_rec(const std::vector<int>& remaining,
                     std::vector<std::vector<int>>& segs,
                     std::vector<BoxWord>& out) {
  if (remaining.empty()) {
    if (segs.size() >= 2) {
      std::vector<int> w;
      for (size_t i = 0; i < segs.size(); ++i) {
        if (i) w.push_back(kBox);
        w.insert(w.end(), segs[i].begin(), segs[i].end());
      }
      out.push_back(BoxWord::from_letters(std::move(w)));
    }
    return;
  }
  const bool first = segs.empty();
  const int m = static_cast<int>(remaining.size());
  // choose the next segment as any subset, kept sorted
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> seg, rest;
    for (int i = 0; i < m; ++i)
      ((mask >> i) & 1 ? seg : rest).push_back(remaining[i]);
    const bool is_final = rest.empty();
    const size_t need = first ? 1 : 2;
    if (!is_final && seg.size() < need) continue;
    if (is_final && segs.empty()) continue;  // box-free handled separately
    segs.push_back(seg);
    bp_segments_rec(rest, segs, out);
    segs.pop_back();
  }
}

}  // namespace

std::vector<BoxWord> enumerate_bp(const std::vector<int>& support) {
  std::vector<int> A = support;
  std::sort(A.begin(), A.end());
  std::vector<BoxWord> out;
  out.push_back(BoxWord::from_letters(A));  // the box-free word
  std::vector<std::vector<int>> segs;
  bp_segments_rec(A, segs, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// partitions of sorted elts into runs of size >= 2 (first run holds elts[0])
void run_partitions(const std::vector<int>& elts,
                    std::vector<std::vector<int>>& acc,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (elts.empty()) {
    out.push_back(acc);
    return;
  }
  const int m = static_cast<int>(elts.size());
  for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
    std::vector<int> blk{elts[0]}, rest;
    for (int i = 1; i < m; ++i)
      ((mask >> (i - 1)) & 1 ? blk : rest).push_back(elts[i]);
    if (blk.size() < 2) continue;
    acc.push_back(blk);
    run_partitions(rest, acc, out);
    acc.pop_back();
  }
}

std::vector<BoxCycle> all_box_cycles_on(const std::vector<int>& S) {
  std::vector<BoxCycle> out;
  if (S.size() == 1) {
    out.push_back(BoxCycle::from_letters({S[0]}));
    return out;
  }
  std::vector<std::vector<std::vector<int>>> parts;
  std::vector<std::vector<int>> acc;
  run_partitions(S, acc, parts);
  for (auto& part : parts) {
    const int b = static_cast<int>(part.size());
    if ((static_cast<int>(S.size()) + b) % 2 == 0) continue;
    std::vector<int> order(b - 1);
    for (int i = 0; i < b - 1; ++i) order[i] = i + 1;
    // cyclic arrangements: first block (holding min) fixed, others permuted
    do {
      std::vector<int> seq;
      auto add = [&](const std::vector<int>& blk) {
        seq.insert(seq.end(), blk.begin(), blk.end());
        seq.push_back(kBox);
      };
      add(part[0]);
      for (int i : order) add(part[i]);
      out.push_back(BoxCycle::from_letters(seq));
      out.push_back(BoxCycle::from_letters({seq.rbegin(), seq.rend()}));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void cbp_rec(const std::vector<int>& remaining, std::vector<BoxCycle>& acc,
             std::vector<CyclicBoxPerm>& out) {
  if (remaining.empty()) {
    out.push_back(CyclicBoxPerm::from_cycles(acc));
    return;
  }
  const int m = static_cast<int>(remaining.size());
  for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
    std::vector<int> blk{remaining[0]}, rest;
    for (int i = 1; i < m; ++i)
      ((mask >> (i - 1)) & 1 ? blk : rest).push_back(remaining[i]);
    for (const BoxCycle& c : all_box_cycles_on(blk)) {
      acc.push_back(c);
      cbp_rec(rest, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<CyclicBoxPerm> enumerate_cbp(const std::vector<int>& support) {
  std::vector<int> A = support;
  std::sort(A.begin(), A.end());
  std::vector<CyclicBoxPerm> out;
  std::vector<BoxCycle> acc;
  cbp_rec(A, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ballot
