#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fourcalc/fpgroup/presentation.hpp"
#include "fourcalc/lattice/int_matrix.hpp"

namespace fourcalc::fpgroup {

// Z^free_rank + Z/t1 + ... + Z/tk with t1 | t2 | ... and every ti >= 2.
struct AbelianInvariants {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion_factors;

  bool is_trivial() const { return free_rank == 0 && torsion_factors.empty(); }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Rows are relators, columns generators, entries exponent sums.
lattice::IntMatrix exponent_matrix(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

// e.g. "Z^2 + Z/2 + Z/6", or "0" for the trivial group.
std::string to_string(const AbelianInvariants& a);

}  // namespace fourcalc::fpgroup
