#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include <nlohmann/json.hpp>

#include "fourcalc/lattice/lattice.hpp"

namespace fourcalc::sw {

using lattice::IntLattice;
using lattice::LatticeVector;

// Seiberg-Witten values on characteristic classes of a unimodular lattice.
// Only classes with nonzero value are stored.
class SWState {
 public:
  SWState() = default;
  // Validates: keys characteristic and of the right rank, values nonzero,
  // support closed under negation with |value(K)| = |value(-K)|.
  SWState(std::shared_ptr<const IntLattice> lattice, std::int64_t b2plus,
          std::map<LatticeVector, std::int64_t> values, bool chambered = false);

  const IntLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const IntLattice>& lattice_ptr() const { return lattice_; }
  std::int64_t b2plus() const { return b2plus_; }
  bool chambered() const { return chambered_; }
  const std::map<LatticeVector, std::int64_t>& values() const { return values_; }
  std::size_t support_size() const { return values_.size(); }

  // 0 for classes outside the support.
  std::int64_t value(const LatticeVector& k) const;

 private:
  std::shared_ptr<const IntLattice> lattice_;
  std::int64_t b2plus_ = 0;
  std::map<LatticeVector, std::int64_t> values_;
  bool chambered_ = false;
};

// {lattice, b2plus, chambered, entries: [{coords, value}]} in key order.
nlohmann::json to_json(const SWState& s);

}  // namespace fourcalc::sw
