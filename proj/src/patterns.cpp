#include "ballot/patterns.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ballot/statistics.hpp"

namespace ballot {

Pattern Pattern::from_word(std::vector<int> word) {
  Permutation::from_word(word);  // validation only
  Pattern p;
  p.word_ = std::move(word);
  return p;
}

Pattern Pattern::parse(std::string_view text) {
  const bool spaced = text.find(' ') != std::string_view::npos;
  std::vector<int> w;
  if (spaced) {
    w = Permutation::parse(text).word();
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("pattern digits must be 1..9");
      w.push_back(ch - '0');
    }
  }
  return from_word(std::move(w));
}

std::string Pattern::str() const {
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

namespace {

// middle-element scans; w has distinct letters
bool contains3(const std::vector<int>& w, int p1, int p2, int p3) {
  const int n = static_cast<int>(w.size());
  if (n < 3) return false;
  // encode the pattern by the role of the middle position
  // 123: w_i < w_j < w_k        213: w_j < w_i < w_k
  // 132: w_i < w_k < w_j        231: w_k < w_i < w_j
  // 312: w_j < w_k < w_i        321: w_i > w_j > w_k
  const int code = p1 * 100 + p2 * 10 + p3;
  switch (code) {
    case 123: {
      int pref_min = w[0];
      std::vector<int> suf_max(n + 1, std::numeric_limits<int>::min());
      for (int i = n - 1; i >= 0; --i) suf_max[i] = std::max(suf_max[i + 1], w[i]);
      for (int j = 1; j + 1 < n; ++j) {
        if (pref_min < w[j] && suf_max[j + 1] > w[j]) return true;
        pref_min = std::min(pref_min, w[j]);
      }
      return false;
    }
    case 321: {
      int pref_max = w[0];
      std::vector<int> suf_min(n + 1, std::numeric_limits<int>::max());
      for (int i = n - 1; i >= 0; --i) suf_min[i] = std::min(suf_min[i + 1], w[i]);
      for (int j = 1; j + 1 < n; ++j) {
        if (pref_max > w[j] && suf_min[j + 1] < w[j]) return true;
        pref_max = std::max(pref_max, w[j]);
      }
      return false;
    }
    case 213: {
      // pick the smallest left value above w_j; any later value above it works
      std::vector<int> suf_max(n + 1, std::numeric_limits<int>::min());
      for (int i = n - 1; i >= 0; --i) suf_max[i] = std::max(suf_max[i + 1], w[i]);
      for (int j = 1; j + 1 < n; ++j) {
        int m = std::numeric_limits<int>::max();
        for (int i = 0; i < j; ++i)
          if (w[i] > w[j]) m = std::min(m, w[i]);
        if (m != std::numeric_limits<int>::max() && suf_max[j + 1] > m) return true;
      }
      return false;
    }
    case 231: {
      // pick the largest left value below w_j; any later value below it works
      std::vector<int> suf_min(n + 1, std::numeric_limits<int>::max());
      for (int i = n - 1; i >= 0; --i) suf_min[i] = std::min(suf_min[i + 1], w[i]);
      for (int j = 1; j + 1 < n; ++j) {
        int m = std::numeric_limits<int>::min();
        for (int i = 0; i < j; ++i)
          if (w[i] < w[j]) m = std::max(m, w[i]);
        if (m != std::numeric_limits<int>::min() && suf_min[j + 1] < m) return true;
      }
      return false;
    }
    case 132: {
      // j is the peak role: need earlier value below some later value below w_j
      int pref_min = w[0];
      for (int j = 1; j + 1 < n; ++j) {
        for (int k = j + 1; k < n; ++k)
          if (pref_min < w[k] && w[k] < w[j]) return true;
        pref_min = std::min(pref_min, w[j]);
      }
      return false;
    }
    case 312: {
      // j is the valley role: need earlier value above some later middle value
      int pref_max = w[0];
      for (int j = 1; j + 1 < n; ++j) {
        if (pref_max > w[j])
          for (int k = j + 1; k < n; ++k)
            if (w[j] < w[k] && w[k] < pref_max) return true;
        pref_max = std::max(pref_max, w[j]);
      }
      return false;
    }
  }
  throw std::logic_error("not a length-3 pattern");
}

bool embed(const std::vector<int>& w, const std::vector<int>& ranks, size_t wi,
           std::vector<int>& chosen) {
  const size_t k = ranks.size();
  if (chosen.size() == k) return true;
  if (w.size() - wi < k - chosen.size()) return false;
  for (size_t i = wi; i < w.size(); ++i) {
    bool ok = true;
    for (size_t a = 0; a < chosen.size() && ok; ++a) {
      const bool want_less = ranks[a] < ranks[chosen.size()];
      if (want_less != (w[static_cast<size_t>(chosen[a])] < w[i])) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(static_cast<int>(i));
    if (embed(w, ranks, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_naive(const std::vector<int>& word, const Pattern& p) {
  if (p.size() == 0) return true;
  std::vector<int> chosen;
  return embed(word, p.word(), 0, chosen);
}

bool contains(const std::vector<int>& word, const Pattern& p) {
  if (p.size() == 3)
    return contains3(word, p.word()[0], p.word()[1], p.word()[2]);
  return contains_naive(word, p);
}

bool contains(const Permutation& perm, const Pattern& p) {
  return contains(perm.word(), p);
}

RecurrenceId recurrence_id_from_name(const std::string& name) {
  if (name == "E") return RecurrenceId::E;
  if (name == "E_alt") return RecurrenceId::EAlt;
  if (name == "G") return RecurrenceId::G;
  throw std::invalid_argument("unknown recurrence id: " + name);
}

const BigInt RecurrenceTable::kZero{0};

RecurrenceTable::RecurrenceTable(RecurrenceId id, int max_n, int max_hb)
    : id_(id), max_n_(max_n), max_hb_(max_hb), span_(max_hb + max_n + 2) {}

BigInt& RecurrenceTable::cell(int n, int h, int b) {
  return data_[(static_cast<size_t>(n) * span_ + h) * span_ + b];
}

const BigInt& RecurrenceTable::get(int n, int h, int b) const {
  if (n < 0 || h < 0 || b < 0 || n > max_n_ || h >= span_ || b >= span_)
    return kZero;
  return data_[(static_cast<size_t>(n) * span_ + h) * span_ + b];
}

const BigInt& RecurrenceTable::at(int n, int h, int b) const {
  return get(n, h, b);
}

RecurrenceTable RecurrenceTable::build(RecurrenceId id, int max_n, int max_hb) {
  RecurrenceTable t(id, max_n, max_hb);
  const int span = t.span_;
  t.data_.assign(static_cast<size_t>(max_n + 1) * span * span, BigInt(0));
  for (int h = 0; h < span; ++h) t.cell(0, h, h) = 1;
  for (int n = 1; n <= max_n; ++n)
    for (int h = 0; h < span; ++h)
      for (int b = 0; b < span; ++b) {
        BigInt v = 0;
        switch (id) {
          case RecurrenceId::E:
            v = t.get(n - 1, h + 1, b);
            if (h >= 1) v += t.get(n - 1, h - 1, b);
            for (int i = 0; i <= n - 2; ++i)
              for (int a = 0; a + 1 < span; ++a) {
                const BigInt& f = t.get(i, h + 1, a + 1);
                if (f != 0) v += f * t.get(n - 2 - i, a, b);
              }
            break;
          case RecurrenceId::EAlt:
            v = t.get(n - 1, h + 1, b) + t.get(n - 1, h, b + 1);
            for (int i = 0; i <= n - 2; ++i)
              for (int a = 0; a + 1 < span; ++a) {
                const BigInt& f = t.get(i, h, a + 1);
                if (f != 0) v += f * t.get(n - 2 - i, a + 1, b);
              }
            break;
          case RecurrenceId::G:
            v = t.get(n - 1, h + 1, b);
            if (h >= 1) {
              v += t.get(n - 1, h - 1, b);
              for (int i = 0; i <= n - 2; ++i)
                for (int a = 0; a + 1 < span; ++a) {
                  const BigInt& f = t.get(i, h - 1, a);
                  if (f != 0) v += f * t.get(n - 2 - i, a + 1, b);
                }
            }
            break;
        }
        t.cell(n, h, b) = std::move(v);
      }
  return t;
}

BigInt ballot_recurrence(RecurrenceId id, int n, int h, int b) {
  if (n < 0 || h < 0 || b < 0)
    throw std::invalid_argument("n, h, b must be >= 0");
  return RecurrenceTable::build(id, n, std::max(h, b)).at(n, h, b);
}

BigInt avoid_count(const ClassSpec& spec, int n, const Pattern& p) {
  BigInt c = 0;
  for_each_in_class(spec, n, [&](const Permutation& q) {
    if (!contains(q, p)) ++c;
    return true;
  });
  return c;
}

namespace {

// order-isomorphic copy of `word` over the sorted value list
std::vector<int> relabel(const std::vector<int>& word,
                         const std::vector<int>& values) {
  std::vector<int> order(word.size());
  for (size_t i = 0; i < word.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (size_t rank = 0; rank < order.size(); ++rank)
    out[order[rank]] = values[rank];
  return out;
}

// split at the minimum (213 -> 312) or maximum (132 -> 231); blocks keep
// their order, the leading block takes the smaller value range
std::vector<int> wilf_rec(const std::vector<int>& w, bool split_at_min) {
  if (w.empty()) return {};
  const auto pivot_it = split_at_min ? std::min_element(w.begin(), w.end())
                                     : std::max_element(w.begin(), w.end());
  const int pivot = *pivot_it;
  const std::vector<int> left(w.begin(), pivot_it);
  const std::vector<int> right(pivot_it + 1, w.end());
  const std::vector<int> L = wilf_rec(left, split_at_min);
  const std::vector<int> R = wilf_rec(right, split_at_min);
  std::vector<int> rest;
  for (int x : w)
    if (x != pivot) rest.push_back(x);
  std::sort(rest.begin(), rest.end());
  const std::vector<int> lows(rest.begin(), rest.begin() + L.size());
  const std::vector<int> highs(rest.begin() + L.size(), rest.end());
  std::vector<int> out = relabel(L, lows);
  out.push_back(pivot);
  const auto relabeled = relabel(R, highs);
  out.insert(out.end(), relabeled.begin(), relabeled.end());
  return out;
}

}  // namespace

Permutation wilf_map(WilfMap which, const Permutation& p) {
  const Pattern source = which == WilfMap::Varphi213To312
                             ? Pattern::from_word({2, 1, 3})
                             : Pattern::from_word({1, 3, 2});
  if (contains(p, source))
    throw std::domain_error("input contains the source pattern " + source.str());
  return Permutation::from_word(
      wilf_rec(p.word(), which == WilfMap::Varphi213To312));
}

std::vector<int> descent_positions(const Permutation& p) {
  std::vector<int> out;
  const auto& w = p.word();
  for (int i = 0; i + 1 < p.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(i + 1);
  return out;
}

}  // namespace ballot
