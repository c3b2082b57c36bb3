#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ballot {

struct Check {
  std::string suite;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  double elapsed_seconds = 0.0;
  std::uint64_t seed = 0;
  bool all_pass() const;
};

/// Suites: spiro, wz, main_thm, table1, gessel213, gb231, egf, clusters,
/// roundtrip, all. max_n is clamped to each suite's guard; exceeding the
/// guard by request throws.
Report verify_suite(const std::string& name, int max_n, std::uint64_t seed = 1);

const std::vector<std::string>& verify_suite_names();
int verify_suite_guard(const std::string& name);

}  // namespace ballot
