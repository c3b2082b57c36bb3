#pragma once

#include <string>
#include <vector>

#include "ballot/boxperm.hpp"
#include "ballot/permutation.hpp"

namespace ballot {

/// A maximal Dyck factor: a consecutive subword (length >= 3, odd) whose
/// height profile starts and ends at the same level and never dips below it.
/// `begin`/`len` give the source span: letter positions (0-based) for linear
/// factors, (cycle_index, position within the stored cycle) for cyclic ones.
struct DyckFactor {
  std::vector<int> word;
  int cycle_index = -1;  // -1 for linear factors
  int begin = 0;
  int len = 0;
};

struct LinearDecomposition {
  std::vector<DyckFactor> factors;
  BoxWord skeleton;
};

struct CyclicDecomposition {
  std::vector<DyckFactor> factors;
  CyclicBoxPerm skeleton;
};

/// Splits a ballot permutation into its maximal Dyck factors and the box-word
/// skeleton (boundary letters retained, interiors boxed). Throws on
/// non-ballot input.
LinearDecomposition extract_linear(const Permutation& p);

/// Cycle-side factor extraction; every cycle must have odd length.
CyclicDecomposition extract_cyclic(const CycleSystem& cs);

/// Re-inserts factors into their boxes, matching boundary pairs; a factor
/// flanked as (d1, box, dk) is written forward, as (dk, box, d1) reversed.
Permutation insert_properly(const BoxWord& skeleton,
                            const std::vector<DyckFactor>& factors);
CycleSystem insert_properly(const CyclicBoxPerm& skeleton,
                            const std::vector<DyckFactor>& factors);

/// The ballot -> odd-order bijection and its inverse. Transports descents to
/// exc_tilde and the peak set to the cyclic peak set.
CycleSystem Psi(const Permutation& p);
Permutation Psi_inv(const CycleSystem& cs);

}  // namespace ballot
