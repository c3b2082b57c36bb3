#pragma once

// Internal decomposition engine shared by the plain and cluster bijections.
// Works on "entries": cluster words where the induced path is flat inside an
// entry and steps +-1 between adjacent entries (up iff last letter of the
// left entry < first letter of the right entry).

#include <vector>

#include "ballot/clusters.hpp"

namespace ballot::engine {

using Entries = std::vector<Cluster>;

struct Span {
  int begin = 0;  // entry index (mod size for cyclic spans)
  int len = 0;    // number of entries
  auto operator<=>(const Span&) const = default;
};

// +1/-1 step entering entry i+1 from entry i.
std::vector<int> steps_linear(const Entries& e);
// steps[i] is the step from entry i to entry (i+1) mod k.
std::vector<int> steps_cyclic(const Entries& e);

// Maximal Motzkin factors (>= 2 letters): scan for the right-most
// minimum-height descent-bottom entry paired with the left-most ascent-bottom
// entry at the same height, recursing on the suffix; then a sweep collects
// uncovered entries of size >= 2 as flat factors.
std::vector<Span> motzkin_spans_linear(const Entries& e);

// Cycle-side analogue: for each peak entry, relative heights h+ (clockwise)
// and h- (counterclockwise) locate the factor ends; flat sweep afterwards.
std::vector<Span> motzkin_spans_cyclic(const Entries& e);

struct LinearDecomp {
  std::vector<Entries> factors;  // in left-to-right source order
  std::vector<Span> spans;
  std::vector<int> skeleton;     // letters with kBox
};

LinearDecomp decompose_linear(const Entries& e);

struct CyclicDecomp {
  std::vector<Entries> factors;
  std::vector<Span> spans;            // parallel to factors
  std::vector<int> factor_cycle;      // source cycle index per factor
  std::vector<std::vector<int>> skeleton_cycles;  // raw letter cycles
};

CyclicDecomp decompose_cyclic(const std::vector<Entries>& cycles);

// Replaces each (a, box, c) triple by the factor whose boundary letters are
// {a, c}; written forward when flanked (first, box, last), reversed when
// flanked (last, box, first). Boundary pairs are necessarily distinct across
// boxes, so the matching is unambiguous.
Entries insert_linear(const std::vector<int>& skeleton,
                      const std::vector<Entries>& factors);
std::vector<Entries> insert_cyclic(
    const std::vector<std::vector<int>>& skeleton_cycles,
    const std::vector<Entries>& factors);

}  // namespace ballot::engine
