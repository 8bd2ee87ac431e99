#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fourcalc/lattice/lattice.hpp"
#include "fourcalc/manifold/profile.hpp"
#include "fourcalc/sw/adjunction.hpp"

namespace fourcalc::constructions {

// An input taken as given rather than computed.
struct AxiomRecord {
  std::string id;
  std::string justification;
  nlohmann::json payload = nlohmann::json::object();
};

nlohmann::json to_json(const AxiomRecord& a);

struct Block {
  std::string id;
  manifold::ManifoldProfile profile;
  std::shared_ptr<const lattice::IntLattice> lattice;
  std::vector<lattice::SurfaceClass> surfaces;
  std::vector<AxiomRecord> axioms;

  sw::AdjunctionConfig adjunction_config() const;
};

// "U", "R", "vanishing-P", "vanishing-Q-odd", "vanishing-Q-even".
Block build_block(std::string_view id);
const std::vector<std::string>& block_ids();

// H_2 of the fiber sum of two copies of T^4 # k CP2bar along the genus-2
// surface (k = 2 gives U, k = 1 gives R). Raw basis d1 D1 .. d4 D4 x y q1..qk,
// alternate basis d1 D1 .. d4 D4 x y e1..ek with e_i = (k==2 ? y : 2y) - q_i.
lattice::IntLattice fiber_sum_lattice(int blowups);

}  // namespace fourcalc::constructions
