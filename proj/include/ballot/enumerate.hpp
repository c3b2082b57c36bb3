#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ballot/bigint.hpp"
#include "ballot/permutation.hpp"

namespace ballot {

enum class PermClass { All, Ballot, OddOrder, Dyck, HbBallot };

struct ClassSpec {
  PermClass cls = PermClass::All;
  int h = 0;  // HbBallot start height
  int b = 0;  // HbBallot end height
};

ClassSpec class_spec_from_name(const std::string& name, int h = 0, int b = 0);

/// Visits every member of the class exactly once, in lexicographic order of
/// one-line words. Return false from the visitor to stop early.
using PermVisitor = std::function<bool(const Permutation&)>;
void for_each_in_class(const ClassSpec& spec, int n, const PermVisitor& visit);

BigInt count_class(const ClassSpec& spec, int n);
/// Same count, partitioned by first letter across threads.
BigInt count_class_parallel(const ClassSpec& spec, int n, int threads = 0);

std::vector<Permutation> collect_class(const ClassSpec& spec, int n);

}  // namespace ballot
