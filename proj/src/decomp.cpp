#include "ballot/decomp.hpp"

#include <algorithm>
#include <stdexcept>

#include "ballot/statistics.hpp"
#include "engine.hpp"

namespace ballot {

namespace {

engine::Entries singleton_entries(const std::vector<int>& word) {
  engine::Entries e;
  e.reserve(word.size());
  for (int x : word) e.push_back({x});
  return e;
}

std::vector<int> flat_word(const engine::Entries& e) {
  std::vector<int> out;
  for (const auto& c : e) {
    if (c.size() != 1) throw std::logic_error("expected singleton entries");
    out.push_back(c.front());
  }
  return out;
}

std::vector<engine::Entries> factor_entries(const std::vector<DyckFactor>& fs) {
  std::vector<engine::Entries> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(singleton_entries(f.word));
  return out;
}

}  // namespace

LinearDecomposition extract_linear(const Permutation& p) {
  if (!is_ballot(p)) throw std::invalid_argument("extract_linear: not a ballot permutation");
  const auto d = engine::decompose_linear(singleton_entries(p.word()));
  LinearDecomposition out;
  out.skeleton = BoxWord::from_letters(d.skeleton);
  for (size_t i = 0; i < d.factors.size(); ++i) {
    DyckFactor f;
    f.word = flat_word(d.factors[i]);
    f.begin = d.spans[i].begin;
    f.len = d.spans[i].len;
    out.factors.push_back(std::move(f));
  }
  return out;
}

CyclicDecomposition extract_cyclic(const CycleSystem& cs) {
  if (!cs.odd_order())
    throw std::invalid_argument("extract_cyclic: cycles must have odd length");
  std::vector<engine::Entries> cycles;
  for (const auto& c : cs.cycles()) cycles.push_back(singleton_entries(c));
  const auto d = engine::decompose_cyclic(cycles);
  CyclicDecomposition out;
  std::vector<BoxCycle> skel;
  for (const auto& sc : d.skeleton_cycles) skel.push_back(BoxCycle::from_letters(sc));
  out.skeleton = CyclicBoxPerm::from_cycles(std::move(skel));
  for (size_t i = 0; i < d.factors.size(); ++i) {
    DyckFactor f;
    f.word = flat_word(d.factors[i]);
    f.cycle_index = d.factor_cycle[i];
    f.begin = d.spans[i].begin;
    f.len = d.spans[i].len;
    out.factors.push_back(std::move(f));
  }
  return out;
}

Permutation insert_properly(const BoxWord& skeleton,
                            const std::vector<DyckFactor>& factors) {
  const auto entries =
      engine::insert_linear(skeleton.letters(), factor_entries(factors));
  return Permutation::from_word(flat_word(entries));
}

CycleSystem insert_properly(const CyclicBoxPerm& skeleton,
                            const std::vector<DyckFactor>& factors) {
  std::vector<std::vector<int>> raw;
  for (const auto& c : skeleton.cycles()) raw.push_back(c.letters());
  const auto cycles = engine::insert_cyclic(raw, factor_entries(factors));
  std::vector<std::vector<int>> out;
  for (const auto& c : cycles) out.push_back(flat_word(c));
  return CycleSystem::from_cycles(std::move(out));
}

CycleSystem Psi(const Permutation& p) {
  const auto d = extract_linear(p);
  return insert_properly(psi(d.skeleton), d.factors);
}

Permutation Psi_inv(const CycleSystem& cs) {
  const auto d = extract_cyclic(cs);
  const Permutation out = insert_properly(psi_inv(d.skeleton), d.factors);
  if (!is_ballot(out)) throw std::logic_error("Psi_inv produced a non-ballot word");
  return out;
}

}  // namespace ballot
