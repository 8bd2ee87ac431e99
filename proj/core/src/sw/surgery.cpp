#include "fourcalc/sw/surgery.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "fourcalc/errors.hpp"

namespace fourcalc::sw {

void require_coprime(std::int64_t p, std::int64_t q) {
  if (std::gcd(p, q) != 1) {
    throw InputError("surgery coefficient (" + std::to_string(p) + "," + std::to_string(q) + ") is not coprime");
  }
}

std::int64_t torus_surgery_sw(std::int64_t f10, std::int64_t f01, std::int64_t p, std::int64_t q) {
  require_coprime(p, q);
  return lattice::checked_add(lattice::checked_mul(p, f10), lattice::checked_mul(q, f01));
}

namespace {

std::int64_t step_value(std::int64_t current, const SurgerySpec& spec, const VanishingOracle& vanishing,
                        const F01Source& f01) {
  std::int64_t f01_value = 0;
  if (!(vanishing && vanishing(spec))) {
    const auto supplied = f01 ? f01(spec) : std::nullopt;
    if (!supplied) {
      throw InputError("insufficient data: no F(0,1) for surgery on '" + spec.torus_label + "'");
    }
    f01_value = *supplied;
  }
  return torus_surgery_sw(current, f01_value, spec.p, spec.q);
}

}  // namespace

std::vector<std::int64_t> surgery_chain_trace(std::int64_t base_value, std::span<const SurgerySpec> chain,
                                              const VanishingOracle& vanishing, const F01Source& f01) {
  std::vector<std::int64_t> trace{std::llabs(base_value)};
  std::int64_t current = base_value;
  for (const auto& spec : chain) {
    current = step_value(current, spec, vanishing, f01);
    trace.push_back(std::llabs(current));
  }
  return trace;
}

std::int64_t run_surgery_chain(std::int64_t base_value, std::span<const SurgerySpec> chain,
                               const VanishingOracle& vanishing, const F01Source& f01) {
  return surgery_chain_trace(base_value, chain, vanishing, f01).back();
}

SWState apply_surgery_chain(const SWState& s, std::span<const SurgerySpec> chain, const VanishingOracle& vanishing,
                            const std::string& result_lattice_name) {
  std::vector<std::string> removed;
  for (const auto& spec : chain) {
    require_coprime(spec.p, spec.q);
    if (spec.kills_pair) {
      removed.push_back(spec.kills_pair->first);
      removed.push_back(spec.kills_pair->second);
    }
  }
  auto result = std::make_shared<const IntLattice>(lattice::remove_summand(s.lattice(), removed, result_lattice_name));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < s.lattice().rank(); ++i) {
    const auto& label = s.lattice().basis_labels()[i];
    if (std::find(removed.begin(), removed.end(), label) == removed.end()) kept.push_back(i);
  }
  std::map<LatticeVector, std::int64_t> values;
  for (const auto& [k, v] : s.values()) {
    LatticeVector projected = LatticeVector::zero(kept.size());
    std::size_t nonzero_removed = 0;
    for (std::size_t i = 0, a = 0; i < k.size(); ++i) {
      if (a < kept.size() && kept[a] == i) {
        projected[a++] = k[i];
      } else if (k[i] != 0) {
        ++nonzero_removed;
      }
    }
    if (nonzero_removed != 0) throw InputError("apply_surgery_chain: class meets a removed summand");
    std::int64_t value = v;
    for (const auto& spec : chain) value = step_value(value, spec, vanishing, {});
    if (value != 0) values[projected] = value;
  }
  // b2+ drops by the positive part of the removed summand.
  std::int64_t removed_positive = 0;
  if (!removed.empty()) {
    lattice::IntMatrix g(removed.size(), removed.size());
    for (std::size_t a = 0; a < removed.size(); ++a)
      for (std::size_t b = 0; b < removed.size(); ++b)
        g(a, b) = s.lattice().gram()(*s.lattice().index_of(removed[a]), *s.lattice().index_of(removed[b]));
    removed_positive =
        static_cast<std::int64_t>(lattice::signature_and_parity(IntLattice("removed", removed, g)).positive);
  }
  return SWState(result, s.b2plus() - removed_positive, std::move(values), s.chambered());
}

}  // namespace fourcalc::sw
