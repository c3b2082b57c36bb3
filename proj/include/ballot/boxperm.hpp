#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ballot {

/// Sentinel letter for the box; rendered as '#' in text form.
inline constexpr int kBox = 0;

/// A word over A u {box} whose integer segments are increasing: the segment
/// before the first box and after the last box have length >= 1, segments
/// between two boxes have length >= 2. A box-free word must be sorted(A).
class BoxWord {
 public:
  BoxWord() = default;  // empty word

  static BoxWord from_letters(std::vector<int> letters);
  /// Parses "4 6 # 2 7 16".
  static BoxWord parse(std::string_view text);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int box_count() const;
  /// Sorted set of integer letters.
  std::vector<int> support() const;

  std::string str() const;

  auto operator<=>(const BoxWord&) const = default;

 private:
  std::vector<int> letters_;
};

enum class BpClass { BP1 = 1, BP2 = 2, BP3 = 3 };

/// BP1: min letter in even position, or first with a box second.
/// BP2: min letter first, second letter not a box (or word of length 1).
/// BP3: min letter in an odd position > 1.
BpClass classify(const BoxWord& w);

BoxWord phi(const BoxWord& w);      // BP1 -> BP3, box-neighbor-set preserving
BoxWord phi_inv(const BoxWord& w);  // BP3 -> BP1
/// Which of the five inverse dispatch conditions fires (1-5); they are
/// mutually exclusive over valid BP3 words. Throws if none fires.
int phi_inv_case(const BoxWord& w);

/// An odd-length cycle over integers and boxes. Either a single integer
/// (fixed point) or it contains a box and every maximal integer run read
/// clockwise (forward) or counterclockwise (reverse) has length >= 2 and is
/// increasing. Stored clockwise, rotated so the minimum integer is first.
class BoxCycle {
 public:
  enum class Orientation { FixedPoint, Forward, Reverse };

  static BoxCycle from_letters(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  Orientation orientation() const { return orientation_; }
  int length() const { return static_cast<int>(letters_.size()); }
  std::vector<int> support() const;

  std::string str() const;

  auto operator<=>(const BoxCycle&) const = default;

 private:
  std::vector<int> letters_;
  Orientation orientation_ = Orientation::FixedPoint;
};

class CyclicBoxPerm {
 public:
  CyclicBoxPerm() = default;

  static CyclicBoxPerm from_cycles(std::vector<BoxCycle> cycles);
  /// Parses "(6 2 #)(4)(16 5 # 14 11 9 #)".
  static CyclicBoxPerm parse(std::string_view text);

  const std::vector<BoxCycle>& cycles() const { return cycles_; }
  std::vector<int> support() const;

  std::string str() const;

  auto operator<=>(const CyclicBoxPerm&) const = default;

 private:
  std::vector<BoxCycle> cycles_;  // sorted by minimum letter
};

/// Unordered pair of the two integer neighbors of a box, stored (min,max).
using NeighborPair = std::pair<int, int>;

std::vector<NeighborPair> box_neighbor_multiset(const BoxWord& w);
std::vector<NeighborPair> box_neighbor_multiset(const CyclicBoxPerm& c);
std::set<NeighborPair> box_neighbor_set(const BoxWord& w);
std::set<NeighborPair> box_neighbor_set(const CyclicBoxPerm& c);

/// Factors the word into odd cycles: a BP2 word sheds a fixed point, a BP3
/// word sheds a forward cycle, a BP1 word is first mapped through phi and
/// sheds a reverse cycle. Box-neighbor-set preserving bijection.
CyclicBoxPerm psi(const BoxWord& w);
BoxWord psi_inv(const CyclicBoxPerm& c);

/// Direct enumeration from the segment/run invariants, independent of
/// phi/psi; used as the oracle for bijectivity checks.
std::vector<BoxWord> enumerate_bp(const std::vector<int>& support);
std::vector<CyclicBoxPerm> enumerate_cbp(const std::vector<int>& support);

}  // namespace ballot
