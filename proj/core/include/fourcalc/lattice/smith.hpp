#pragma once

#include <cstdint>
#include <vector>

#include "fourcalc/lattice/int_matrix.hpp"

namespace fourcalc::lattice {

// left * M * right == diagonal, with left/right unimodular and
// left_inverse * diagonal * right_inverse == M.
struct SmithForm {
  std::vector<std::int64_t> invariants;  // nonzero diagonal, d1 | d2 | ..., all positive
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  IntMatrix right_inverse;

  std::size_t rank() const { return invariants.size(); }
};

// Exact over arbitrary precision; throws ResourceError when an entry of the
// result does not fit in int64.
SmithForm smith_normal_form(const IntMatrix& m);

// The invariants alone, without transforms.
std::vector<std::int64_t> smith_invariants(const IntMatrix& m);

}  // namespace fourcalc::lattice
