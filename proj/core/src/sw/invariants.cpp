#include "fourcalc/sw/invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "fourcalc/errors.hpp"

namespace fourcalc::sw {

SWState blowup_sw(const SWState& s, std::int64_t count) {
  if (count < 1) throw InputError("blowup_sw: count must be positive");
  if (count > 62 || (s.support_size() << count) > kMaxBlowupClasses || (s.support_size() << count) >> count != s.support_size()) {
    throw ResourceError("blowup_sw: " + std::to_string(s.support_size()) + " classes times 2^" +
                        std::to_string(count) + " exceeds the materialization limit");
  }
  const std::size_t old_rank = s.lattice().rank();
  std::size_t first_index = 1;
  while (s.lattice().index_of("E" + std::to_string(first_index))) ++first_index;
  std::vector<std::string> labels;
  for (std::int64_t i = 0; i < count; ++i) labels.push_back("E" + std::to_string(first_index + i));
  lattice::IntMatrix gram(static_cast<std::size_t>(count), static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) gram(i, i) = -1;
  const IntLattice exceptional("E", labels, gram, lattice::Unimodular::kRequired);
  auto extended = std::make_shared<const IntLattice>(lattice::direct_sum(
      s.lattice(), exceptional, s.lattice().name() + "#" + std::to_string(count) + "CP2bar"));

  std::map<LatticeVector, std::int64_t> values;
  const std::uint64_t patterns = 1ULL << count;
  for (const auto& [k, v] : s.values()) {
    LatticeVector expanded = LatticeVector::zero(old_rank + static_cast<std::size_t>(count));
    std::copy(k.coords.begin(), k.coords.end(), expanded.coords.begin());
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      for (std::int64_t i = 0; i < count; ++i) expanded[old_rank + i] = (mask >> i) & 1U ? -1 : 1;
      values.emplace(expanded, v);
    }
  }
  return SWState(extended, s.b2plus(), std::move(values), s.chambered());
}

namespace {

void require_chambers(const SWState& s) {
  if (s.b2plus() != 1) {
    throw InputError("chamber_spread: requires b2plus = 1, got " + std::to_string(s.b2plus()));
  }
}

std::set<std::int64_t> spread(std::int64_t v) { return {v - 1, v, v + 1}; }

}  // namespace

std::map<LatticeVector, std::set<std::int64_t>> chamber_spread(const SWState& s) {
  require_chambers(s);
  std::map<LatticeVector, std::set<std::int64_t>> out;
  for (const auto& [k, v] : s.values()) out.emplace(k, spread(v));
  return out;
}

std::set<std::int64_t> chamber_spread_absent() { return spread(0); }

std::set<std::int64_t> chamber_value_union(const SWState& s) {
  std::set<std::int64_t> out = chamber_spread_absent();
  for (const auto& [k, values] : chamber_spread(s)) out.insert(values.begin(), values.end());
  return out;
}

std::set<std::int64_t> chamber_value_union_after_blowup(const SWState& s, std::int64_t count) {
  if (count < 1) throw InputError("blowup_sw: count must be positive");
  // Blow-ups keep b2plus and copy every value.
  return chamber_value_union(s);
}

bool check_irreducible(const SWState& s) {
  if (s.support_size() == 0) return false;
  for (auto i = s.values().begin(); i != s.values().end(); ++i)
    for (auto j = std::next(i); j != s.values().end(); ++j) {
      if (lattice::square(s.lattice(), i->first - j->first) == -4) return false;
    }
  return true;
}

Fingerprint sw_fingerprint(const SWState& s) {
  Fingerprint out;
  for (const auto& [k, v] : s.values()) out.emplace_back(std::llabs(v), lattice::square(s.lattice(), k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fourcalc::sw
