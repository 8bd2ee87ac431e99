#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fourcalc/sw/state.hpp"

namespace fourcalc::sw {

struct SurgerySpec {
  std::string torus_label;
  std::int64_t p = 1;
  std::int64_t q = 0;
  bool luttinger = false;
  // Hyperbolic pair removed from H_2 by this surgery, if any.
  std::optional<std::pair<std::string, std::string>> kills_pair;

  friend bool operator==(const SurgerySpec&, const SurgerySpec&) = default;
};

// Throws InputError unless gcd(p, q) = 1.
void require_coprime(std::int64_t p, std::int64_t q);

// p * F(1,0) + q * F(0,1)
std::int64_t torus_surgery_sw(std::int64_t f10, std::int64_t f01, std::int64_t p, std::int64_t q);

using VanishingOracle = std::function<bool(const SurgerySpec&)>;
using F01Source = std::function<std::optional<std::int64_t>(const SurgerySpec&)>;

// Magnitudes after each step, starting with |base_value|. The current value
// plays F(1,0); F(0,1) is 0 when the oracle says so, else taken from `f01`.
// Throws InputError("insufficient data ...") when neither applies.
std::vector<std::int64_t> surgery_chain_trace(std::int64_t base_value, std::span<const SurgerySpec> chain,
                                              const VanishingOracle& vanishing, const F01Source& f01 = {});

// |value| after the whole chain.
std::int64_t run_surgery_chain(std::int64_t base_value, std::span<const SurgerySpec> chain,
                               const VanishingOracle& vanishing, const F01Source& f01 = {});

// Applies the chain to every class of the state: values follow the chain
// (keeping their sign), killed pairs leave the lattice. Classes must vanish
// on the removed summands.
SWState apply_surgery_chain(const SWState& s, std::span<const SurgerySpec> chain, const VanishingOracle& vanishing,
                            const std::string& result_lattice_name);

}  // namespace fourcalc::sw
