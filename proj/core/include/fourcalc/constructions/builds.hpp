#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fourcalc/constructions/blocks.hpp"
#include "fourcalc/fpgroup/triviality.hpp"
#include "fourcalc/sw/invariants.hpp"
#include "fourcalc/sw/surgery.hpp"

namespace fourcalc::constructions {

constexpr int kMaxN = 100;
constexpr int kMaxB2 = 16;

void require_n(int n);
void require_b2(int b2);

// Surgeries (1,-1), (n,-1), (1,-1), (n,-1) on d1..d4, each killing (d_i, D_i).
std::vector<sw::SurgerySpec> surgery_chain_specs(int n);

// Base state of a fiber-sum block: its two enumerated candidates with values
// +-1 (sign of K.x).
sw::SWState base_state(const Block& b);

struct Construction {
  manifold::ManifoldProfile profile;
  std::shared_ptr<const sw::SWState> sw;  // null when too large to materialize
  fpgroup::Presentation certificate;
  std::vector<std::int64_t> chain_trace;  // |SW| of the seed class per step
  std::vector<AxiomRecord> axioms;
};

// Options for whether to run the pi1 certificate while building.
struct BuildOptions {
  bool certify_pi1 = true;
  fpgroup::TrivialityConfig triviality;
};

Construction build_Xn(int n, const BuildOptions& options = {});
Construction build_Yn(int n, const BuildOptions& options = {});
// Free Z/2 quotients X'_n, Y'_n.
Construction build_Xn_quotient(int n, const BuildOptions& options = {});
Construction build_Yn_quotient(int n, const BuildOptions& options = {});
// A_n = Y'_n # (b2-1) CP2bar. `sw` is the universal cover's state
// (Y_n # (2 b2 - 2) CP2bar) when it fits in memory.
Construction build_An(int n, int b2, const BuildOptions& options = {});

// Chamber value union of the A_n universal cover.
std::set<std::int64_t> an_cover_chamber_union(int n, int b2);

// Named profiles including X_<n>, X'_<n>, Y_<n>, Y'_<n>, A_<n>_b<b2> and
// '#' sums with atomic manifolds.
manifold::ManifoldProfile lookup_profile(std::string_view name, const BuildOptions& options = {});

}  // namespace fourcalc::constructions
