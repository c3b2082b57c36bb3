#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ballot {

/// A permutation of [n] in one-line notation. Letters are 1..n, each once.
class Permutation {
 public:
  Permutation() = default;  // n = 0

  static Permutation identity(int n);
  /// Validates that `word` is a bijection of [n]; throws std::invalid_argument.
  static Permutation from_word(std::vector<int> word);
  /// Parses space-separated integers, e.g. "8 3 9 1 6 4 7 5 2".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// Value at 1-based position i, i.e. pi(i).
  int at(int pos) const { return word_[pos - 1]; }
  const std::vector<int>& word() const { return word_; }
  /// inverse_word()[v-1] is the 1-based position of value v.
  std::vector<int> inverse_word() const;

  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// Disjoint cycles partitioning [n], kept canonical: each cycle rotated so its
/// minimum letter is first, cycles sorted by minimum letter.
class CycleSystem {
 public:
  CycleSystem() = default;

  /// Validates disjointness and that the union of letters is exactly [n].
  static CycleSystem from_cycles(std::vector<std::vector<int>> cycles);
  /// Cycle decomposition of a permutation.
  static CycleSystem of(const Permutation& p);
  /// Parses "(1 8 5 6 4)(2 3 9)(7)".
  static CycleSystem parse(std::string_view text);

  Permutation to_permutation() const;

  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  int size() const { return n_; }
  bool odd_order() const;

  std::string str() const;

  auto operator<=>(const CycleSystem&) const = default;

 private:
  std::vector<std::vector<int>> cycles_;
  int n_ = 0;
};

}  // namespace ballot
