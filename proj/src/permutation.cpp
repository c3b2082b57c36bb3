#include "ballot/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ballot {

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::istringstream in{std::string(text)};
  long long v;
  while (in >> v) out.push_back(static_cast<int>(v));
  if (!in.eof()) throw std::invalid_argument("expected integer tokens");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return from_word(std::move(w));
}

Permutation Permutation::from_word(std::vector<int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n) throw std::invalid_argument("letter out of range 1..n");
    if (seen[v]) throw std::invalid_argument("duplicate letter");
    seen[v] = 1;
  }
  Permutation p;
  p.word_ = std::move(word);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  return from_word(parse_ints(text));
}

std::vector<int> Permutation::inverse_word() const {
  std::vector<int> inv(word_.size());
  for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
  return inv;
}

std::string Permutation::str() const { return join_ints(word_); }

CycleSystem CycleSystem::from_cycles(std::vector<std::vector<int>> cycles) {
  int n = 0;
  for (const auto& c : cycles) {
    if (c.empty()) throw std::invalid_argument("empty cycle");
    for (int v : c) {
      if (v < 1) throw std::invalid_argument("cycle letter must be positive");
      n = std::max(n, v);
    }
  }
  std::vector<char> seen(n + 1, 0);
  for (const auto& c : cycles)
    for (int v : c) {
      if (seen[v]) throw std::invalid_argument("overlapping cycles");
      seen[v] = 1;
    }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw std::invalid_argument("cycles do not cover 1..n");
  for (auto& c : cycles) {
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  CycleSystem cs;
  cs.cycles_ = std::move(cycles);
  cs.n_ = n;
  return cs;
}

CycleSystem CycleSystem::of(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> cycles;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    int x = s;
    while (!seen[x]) {
      seen[x] = 1;
      c.push_back(x);
      x = p.at(x);
    }
    cycles.push_back(std::move(c));
  }
  return from_cycles(std::move(cycles));
}

CycleSystem CycleSystem::parse(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '('");
    size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("missing ')'");
    cycles.push_back(parse_ints(text.substr(i + 1, close - i - 1)));
    i = close + 1;
    skip_ws();
  }
  return from_cycles(std::move(cycles));
}

Permutation CycleSystem::to_permutation() const {
  std::vector<int> w(n_);
  for (const auto& c : cycles_) {
    const int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) w[c[i] - 1] = c[(i + 1) % k];
  }
  return Permutation::from_word(std::move(w));
}

bool CycleSystem::odd_order() const {
  for (const auto& c : cycles_)
    if (c.size() % 2 == 0) return false;
  return true;
}

std::string CycleSystem::str() const {
  std::string out;
  for (const auto& c : cycles_) {
    out += '(';
    out += join_ints(c);
    out += ')';
  }
  return out;
}

}  // namespace ballot
