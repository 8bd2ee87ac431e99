#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fourcalc/lattice/lattice.hpp"

namespace fourcalc::sw {

using lattice::IntLattice;
using lattice::LatticeVector;
using lattice::SurfaceClass;

// (K^2 - 3 sigma - 2 chi) / 4, or nullopt when not an integer.
std::optional<std::int64_t> formal_dimension(std::int64_t k_squared, std::int64_t chi, std::int64_t sigma);

// 2g - 2 >= S.S + |K.S| for surfaces of positive genus and non-negative
// square; true otherwise.
bool adjunction_admits(const IntLattice& l, const LatticeVector& k, const SurfaceClass& s);

struct AdjunctionConfig {
  std::vector<SurfaceClass> surfaces;
  std::int64_t chi = 0;
  std::int64_t sigma = 0;
  std::int64_t eval_bound = 4;       // |K.b| per enumeration basis vector
  std::uint64_t max_box = 50'000'000;  // residual points after propagation
};

// Every characteristic K with integral formal dimension >= 0, admitted by all
// configured surfaces and with |K.b| <= eval_bound on the enumeration basis
// (the alternate basis when present). Sorted, raw coordinates.
// Throws ResourceError when the residual box exceeds max_box.
std::vector<LatticeVector> enumerate_basic_candidates(const AdjunctionConfig& cfg, const IntLattice& l);

struct EnumerationStats {
  std::uint64_t residual_box = 0;
  std::uint64_t points_visited = 0;
};

std::vector<LatticeVector> enumerate_basic_candidates(const AdjunctionConfig& cfg, const IntLattice& l,
                                                      EnumerationStats& stats);

}  // namespace fourcalc::sw
