#include "ballot/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

#include "ballot/statistics.hpp"

namespace ballot {

ClassSpec class_spec_from_name(const std::string& name, int h, int b) {
  if (name == "all") return {PermClass::All};
  if (name == "ballot") return {PermClass::Ballot};
  if (name == "odd_order") return {PermClass::OddOrder};
  if (name == "dyck") return {PermClass::Dyck};
  if (name == "hb_ballot") return {PermClass::HbBallot, h, b};
  throw std::invalid_argument("unknown class: " + name);
}

namespace {

struct Dfs {
  int n;
  ClassSpec spec;
  const PermVisitor* visit;
  std::vector<int> prefix;
  std::vector<char> used;
  bool stopped = false;

  bool height_pruned() const {
    return spec.cls == PermClass::Ballot || spec.cls == PermClass::Dyck ||
           spec.cls == PermClass::HbBallot;
  }

  int start_height() const {
    return spec.cls == PermClass::HbBallot ? spec.h : 0;
  }

  bool final_ok(const Permutation& p, int height) const {
    switch (spec.cls) {
      case PermClass::All:
        return true;
      case PermClass::Ballot:
        return true;  // maintained by pruning
      case PermClass::Dyck:
        return n % 2 == 1 && height == 0;
      case PermClass::HbBallot:
        return height == spec.b;
      case PermClass::OddOrder:
        return is_odd_order(p);
    }
    return false;
  }

  // height = height of the last placed letter
  void rec(int height) {
    if (stopped) return;
    if (static_cast<int>(prefix.size()) == n) {
      const Permutation p = Permutation::from_word(prefix);
      if (final_ok(p, height) && !(*visit)(p)) stopped = true;
      return;
    }
    const bool pruned = height_pruned();
    const int remaining = n - static_cast<int>(prefix.size());
    for (int v = 1; v <= n && !stopped; ++v) {
      if (used[v]) continue;
      int nh = height;
      if (!prefix.empty()) nh += prefix.back() < v ? 1 : -1;
      if (pruned && !prefix.empty()) {
        if (nh < 0) continue;
        // end-height feasibility for classes that pin it
        if (spec.cls == PermClass::Dyck || spec.cls == PermClass::HbBallot) {
          const int target = spec.cls == PermClass::Dyck ? 0 : spec.b;
          const int steps_left = remaining - 1;
          const int d = std::abs(nh - target);
          if (d > steps_left || (steps_left - d) % 2 != 0) continue;
        }
      }
      used[v] = 1;
      prefix.push_back(v);
      rec(nh);
      prefix.pop_back();
      used[v] = 0;
    }
  }
};

void run_dfs(const ClassSpec& spec, int n, const PermVisitor& visit,
             int fixed_first) {
  Dfs dfs{n, spec, &visit, {}, std::vector<char>(n + 1, 0)};
  if (fixed_first > 0) {
    dfs.used[fixed_first] = 1;
    dfs.prefix.push_back(fixed_first);
  }
  dfs.rec(dfs.start_height());
}

bool empty_case_member(const ClassSpec& spec) {
  switch (spec.cls) {
    case PermClass::Dyck:
      return false;  // positive odd length required
    case PermClass::HbBallot:
      return spec.h == spec.b;
    default:
      return true;
  }
}

void validate(const ClassSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (spec.cls == PermClass::HbBallot && (spec.h < 0 || spec.b < 0))
    throw std::invalid_argument("hb_ballot requires h, b >= 0");
}

}  // namespace

void for_each_in_class(const ClassSpec& spec, int n, const PermVisitor& visit) {
  validate(spec, n);
  if (n == 0) {
    if (empty_case_member(spec)) visit(Permutation());
    return;
  }
  run_dfs(spec, n, visit, 0);
}

BigInt count_class(const ClassSpec& spec, int n) {
  BigInt c = 0;
  for_each_in_class(spec, n, [&](const Permutation&) {
    ++c;
    return true;
  });
  return c;
}

BigInt count_class_parallel(const ClassSpec& spec, int n, int threads) {
  validate(spec, n);
  if (n <= 1) return count_class(spec, n);
  if (threads <= 0)
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto first_letter = std::make_shared<std::atomic<int>>(1);
  std::vector<std::future<BigInt>> futs;
  for (int t = 0; t < threads; ++t) {
    futs.push_back(std::async(std::launch::async, [first_letter, spec, n] {
      BigInt local = 0;
      for (;;) {
        const int first = first_letter->fetch_add(1);
        if (first > n) break;
        PermVisitor count = [&local](const Permutation&) {
          ++local;
          return true;
        };
        run_dfs(spec, n, count, first);
      }
      return local;
    }));
  }
  BigInt total = 0;
  for (auto& f : futs) total += f.get();
  return total;
}

std::vector<Permutation> collect_class(const ClassSpec& spec, int n) {
  std::vector<Permutation> out;
  for_each_in_class(spec, n, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace ballot
