#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ballot/bigint.hpp"
#include "ballot/permutation.hpp"

namespace ballot {

/// A nonempty run of distinct positive integers, in a fixed left-to-right
/// order. Size-one clusters print bare, larger ones as "[10 15]".
using Cluster = std::vector<int>;

Cluster reversed_cluster(const Cluster& c);

/// A sequence of disjoint clusters whose letters partition [n]. Encodes a
/// positive path: flat steps inside clusters, +-1 steps between consecutive
/// clusters (up iff last letter of the left cluster < first of the right).
class ClusterPerm {
 public:
  ClusterPerm() = default;

  static ClusterPerm from_clusters(std::vector<Cluster> clusters);
  static ClusterPerm singletons(const Permutation& p);
  /// Parses "2 [10 15] 19 12 8 [9 1 7]".
  static ClusterPerm parse(std::string_view text);

  const std::vector<Cluster>& clusters() const { return clusters_; }
  int size() const;   // total letters
  int order() const { return static_cast<int>(clusters_.size()); }
  /// The underlying one-line word with cluster structure erased.
  Permutation flatten() const;

  std::string str() const;

  auto operator<=>(const ClusterPerm&) const = default;

 private:
  std::vector<Cluster> clusters_;
};

/// Heights of the induced positive path, one value per cluster.
std::vector<int> cluster_heights(const ClusterPerm& cp, int start_height = 0);
/// Well-labelled positive path predicate: the induced path stays >= 0.
bool is_wlpp(const ClusterPerm& cp);

/// A set of cycles of disjoint clusters, every cycle of odd order, letters
/// partitioning [n]. Cycles stored rotated so the cluster containing the
/// minimum letter is first, sorted by minimum letter.
class Ocp {
 public:
  Ocp() = default;

  static Ocp from_cycles(std::vector<std::vector<Cluster>> cycles);
  static Ocp singletons(const CycleSystem& cs);
  /// Parses "(8 2 [10 15] 19 12)(17 14 [4 18])".
  static Ocp parse(std::string_view text);

  const std::vector<std::vector<Cluster>>& cycles() const { return cycles_; }
  int size() const;   // total letters
  int order() const;  // total clusters
  /// Requires every cluster to be a singleton.
  CycleSystem to_cycle_system() const;

  std::string str() const;

  auto operator<=>(const Ocp&) const = default;

 private:
  std::vector<std::vector<Cluster>> cycles_;
  int n_ = 0;
};

/// Extension of the ballot->odd-order bijection to cluster words: maximal
/// Motzkin factors (size >= 2) are boxed out, the skeleton is factored into
/// odd box-cycles, and factors are re-inserted, possibly reversed.
Ocp Phi(const ClusterPerm& cp);       // requires is_wlpp
ClusterPerm Phi_inv(const Ocp& ocp);

/// Number of single odd cluster-cycles on [n] with 2k+1 clusters:
/// C(n, 2k+1) * (n-1)!.
BigInt count_cluster_cycles(int n, int k);

/// Number of well-labelled positive paths of size n whose path has k
/// horizontal steps (double-factorial product formula; (-1)!! = 0!! = 1).
BigInt count_wlpp_horizontal(int n, int k);

/// Visits all cluster-permutations of [n] (not only wlpp), grouped as
/// word x gap-mask, in a deterministic order. Return false to stop.
void for_each_cluster_perm(int n, const std::function<bool(const ClusterPerm&)>& visit);

/// All single odd cluster-cycles on the given support (canonical rotation).
std::vector<std::vector<Cluster>> enumerate_single_cluster_cycles(
    const std::vector<int>& support);

/// All odd-order cluster-permutations of [n]; brute construction independent
/// of Phi.
std::vector<Ocp> enumerate_ocps(int n);

}  // namespace ballot
