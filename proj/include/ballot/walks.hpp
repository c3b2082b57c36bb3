#pragma once

#include <string>
#include <vector>

#include "ballot/bigint.hpp"

namespace ballot {

/// Gessel: steps {up, down, up-right, down-left} confined to x,y >= 0.
/// GB: steps {up, down, left, right} confined to x,y >= 0 and y <= x.
enum class WalkKind { Gessel, GB };

enum class WalkMethod { StepDp, Recurrence, Brute };

struct Coord {
  int x = 0;
  int y = 0;
  auto operator<=>(const Coord&) const = default;
};

/// Brute enumeration guard: 4^n sequences with pruning.
inline constexpr int kBruteWalkLimit = 14;

/// Number of n-step walks from start to end. The recurrence method requires
/// axis endpoints: (0,h)->(0,b) for Gessel, (h,0)->(b,0) for GB.
BigInt count_walks(WalkKind kind, int n, Coord start, Coord end,
                   WalkMethod method);

/// Sum over the free endpoint coordinate on the walk's axis (y-axis ends for
/// Gessel, x-axis ends for GB).
BigInt count_walks_axis_total(WalkKind kind, int n, Coord start,
                              WalkMethod method);

/// Axis-to-axis counts (n, h, b) for 0 <= n <= max_n, 0 <= h,b <= max_hb.
/// Entries outside the table read as 0.
class CountTable {
 public:
  static CountTable build(WalkKind kind, int max_n, int max_hb,
                          WalkMethod method);

  const BigInt& at(int n, int h, int b) const;
  int max_n() const { return max_n_; }
  int max_hb() const { return max_hb_; }
  WalkKind kind() const { return kind_; }

 private:
  CountTable(WalkKind kind, int max_n, int max_hb);
  WalkKind kind_;
  int max_n_, max_hb_;
  std::vector<BigInt> data_;
  static const BigInt kZero;
  BigInt& cell(int n, int h, int b);
};

/// 16^n (5/6)_n (1/2)_n / ((5/3)_n (2)_n) as an exact rational.
BigRat gessel_closed_form_rational(int n);
/// Same value asserted integral.
BigInt gessel_closed_form(int n);

}  // namespace ballot
