#pragma once

#include <set>
#include <utility>
#include <vector>

#include "ballot/permutation.hpp"

namespace ballot {

struct StatRecord {
  int asc = 0;
  int des = 0;
  int exc = 0;        // positions i < n with pi(i) > i
  int exc_tilde = 0;  // sum over cycles of min(cyclic ascents, cyclic descents)
};

StatRecord statistics(const Permutation& p);

/// (peak value b, unordered neighbor pair {a,c} stored as (min,max)).
using PeakEntry = std::pair<int, std::pair<int, int>>;

struct PeakRecord {
  std::set<PeakEntry> peak_set;   // linear peaks with their word neighbors
  std::set<PeakEntry> cpeak_set;  // cyclic peaks with {pi^-1(b), pi(b)}
};

PeakRecord peaks(const Permutation& p);

/// Height profile of the +-1 path: heights[i] is the height of letter i+1,
/// heights[0] == start_height, each step is +1 on an ascent, -1 on a descent.
struct BallotProfile {
  std::vector<int> heights;
  bool is_ballot = true;  // all heights >= 0
  int end_height = 0;
};

BallotProfile ballot_profile(const Permutation& p, int start_height = 0);

bool is_ballot(const Permutation& p);
/// Odd length, ballot, and the path returns to its start height.
bool is_dyck(const Permutation& p);
bool is_hb_ballot(const Permutation& p, int h, int b);
bool is_odd_order(const Permutation& p);

}  // namespace ballot
