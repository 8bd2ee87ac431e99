#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fourcalc/fpgroup/presentation.hpp"
#include "fourcalc/lattice/int_matrix.hpp"
#include "fourcalc/lattice/lattice.hpp"

// Independent reference computations. None of these call the algorithms
// they are used to check.
namespace oracle {

using Perm = std::vector<std::uint32_t>;

// Order of the permutation group generated by `gens` (orbit of the identity
// under right multiplication).
std::uint64_t permutation_group_order(const std::vector<Perm>& gens);

// True when every relator evaluates to the identity permutation.
bool relators_hold(const fourcalc::fpgroup::Presentation& p, const std::vector<Perm>& images);

struct GroupCase {
  std::string name;
  std::string presentation;
  std::vector<Perm> faithful;  // images of the generators in a faithful action
};

// Z/k, D_2n, Q8, S3, A4 and friends with faithful permutation actions.
std::vector<GroupCase> group_corpus();

// Abelian invariant factors from determinantal divisors: d_k = gcd of all
// k-by-k minors, invariant_k = d_k / d_{k-1}. Returns (free rank, factors > 1).
std::pair<std::int64_t, std::vector<std::int64_t>> abelian_invariants_by_minors(
    const fourcalc::lattice::IntMatrix& m);

// Signature by counting sign changes of leading principal minors after
// a random change of basis (rational Sylvester law of inertia).
std::int64_t signature_by_eigen_count(const fourcalc::lattice::IntMatrix& gram);

// Every characteristic K of a rank <= 6 unimodular lattice with |K.b_i| <= bound
// on the raw basis that satisfies `accept`.
std::vector<fourcalc::lattice::LatticeVector> brute_force_characteristic(
    const fourcalc::lattice::IntLattice& l, std::int64_t bound,
    const std::function<bool(const fourcalc::lattice::LatticeVector&)>& accept);

// Random unimodular n-by-n matrix built from elementary moves.
fourcalc::lattice::IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int moves = 12);

}  // namespace oracle
