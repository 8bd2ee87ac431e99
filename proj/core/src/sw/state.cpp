#include "fourcalc/sw/state.hpp"

#include <cstdlib>

#include "fourcalc/errors.hpp"

namespace fourcalc::sw {

SWState::SWState(std::shared_ptr<const IntLattice> lattice, std::int64_t b2plus,
                 std::map<LatticeVector, std::int64_t> values, bool chambered)
    : lattice_(std::move(lattice)), b2plus_(b2plus), values_(std::move(values)), chambered_(chambered) {
  if (!lattice_) throw InputError("SWState: missing lattice");
  if (b2plus_ < 0) throw InputError("SWState: negative b2plus");
  for (const auto& [k, v] : values_) {
    if (k.size() != lattice_->rank()) throw InputError("SWState: class rank does not match lattice");
    if (v == 0) throw InputError("SWState: zero values are not stored");
    if (!lattice::is_characteristic(*lattice_, k)) throw InputError("SWState: key is not characteristic");
    const auto it = values_.find(-k);
    if (it == values_.end()) throw InputError("SWState: support is not closed under negation");
    if (std::llabs(it->second) != std::llabs(v)) throw InputError("SWState: |SW(K)| != |SW(-K)|");
  }
}

std::int64_t SWState::value(const LatticeVector& k) const {
  const auto it = values_.find(k);
  return it == values_.end() ? 0 : it->second;
}

nlohmann::json to_json(const SWState& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [k, v] : s.values()) entries.push_back({{"coords", k.coords}, {"value", v}});
  return {{"lattice", s.lattice().name()},
          {"b2plus", s.b2plus()},
          {"chambered", s.chambered()},
          {"entries", std::move(entries)}};
}

}  // namespace fourcalc::sw
