#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ballot/bigint.hpp"
#include "ballot/enumerate.hpp"
#include "ballot/permutation.hpp"

namespace ballot {

/// A classical pattern: a permutation of [k].
class Pattern {
 public:
  static Pattern from_word(std::vector<int> word);
  /// Accepts "213" (single digits) or "2 1 3".
  static Pattern parse(std::string_view text);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  std::string str() const;

  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<int> word_;
};

/// True iff some subsequence of `word` (distinct letters) is order-isomorphic
/// to the pattern. Length-3 patterns use quadratic middle-element scans.
bool contains(const std::vector<int>& word, const Pattern& p);
bool contains(const Permutation& perm, const Pattern& p);
/// Backtracking subsequence check; cross-check oracle for `contains`.
bool contains_naive(const std::vector<int>& word, const Pattern& p);

/// First-passage recurrences over (n, h, b):
///   E     E_n = E_{n-1}(h+1,b) + E_{n-1}(h-1,b) + sum E_i(h+1,a+1) E_{n-2-i}(a,b)
///   EAlt  E_n = E_{n-1}(h+1,b) + E_{n-1}(h,b+1) + sum E_i(h,a+1) E_{n-2-i}(a+1,b)
///   G     G_n = G_{n-1}(h+1,b) + G_{n-1}(h-1,b) + sum G_i(h-1,a) G_{n-2-i}(a+1,b)
/// with X_0(h,b) = [h == b]; negative-height terms contribute 0.
enum class RecurrenceId { E, EAlt, G };

RecurrenceId recurrence_id_from_name(const std::string& name);

class RecurrenceTable {
 public:
  static RecurrenceTable build(RecurrenceId id, int max_n, int max_hb);
  const BigInt& at(int n, int h, int b) const;
  int max_n() const { return max_n_; }
  int max_hb() const { return max_hb_; }

 private:
  RecurrenceTable(RecurrenceId id, int max_n, int max_hb);
  RecurrenceId id_;
  int max_n_, max_hb_;
  int span_;  // internal height head-room
  std::vector<BigInt> data_;
  static const BigInt kZero;
  BigInt& cell(int n, int h, int b);
  const BigInt& get(int n, int h, int b) const;
};

/// One-shot memoized evaluation.
BigInt ballot_recurrence(RecurrenceId id, int n, int h, int b);

/// Members of the class avoiding the pattern, by filtered enumeration.
BigInt avoid_count(const ClassSpec& spec, int n, const Pattern& p);

enum class WilfMap { Varphi213To312, Eta132To231 };

/// Descent-position-preserving bijections S_n(213) -> S_n(312) and
/// S_n(132) -> S_n(231). The word splits at its minimum (resp. maximum);
/// blocks keep their order and relative pattern while the leading block takes
/// the smaller value range, as target avoidance forces. Throws
/// std::domain_error if the input contains the source pattern.
Permutation wilf_map(WilfMap which, const Permutation& p);

std::vector<int> descent_positions(const Permutation& p);

}  // namespace ballot
