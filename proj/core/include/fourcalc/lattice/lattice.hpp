#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourcalc/lattice/int_matrix.hpp"

namespace fourcalc::lattice {

struct LatticeVector {
  std::vector<std::int64_t> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  static LatticeVector zero(std::size_t rank) {
    return LatticeVector(std::vector<std::int64_t>(rank, 0));
  }
  static LatticeVector unit(std::size_t rank, std::size_t i) {
    auto v = zero(rank);
    v.coords[i] = 1;
    return v;
  }

  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator*(std::int64_t s, const LatticeVector& v);

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

// A second basis of the same lattice: row i of `vectors` is basis vector i
// written in the lattice's stored (raw) coordinates.
struct BasisChange {
  std::vector<std::string> labels;
  IntMatrix vectors;
};

enum class Unimodular { kUnchecked, kRequired };

// Integral symmetric bilinear form on Z^rank with a labelled basis.
class IntLattice {
 public:
  IntLattice() = default;
  IntLattice(std::string name, std::vector<std::string> basis_labels, IntMatrix gram,
             Unimodular check = Unimodular::kUnchecked);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return labels_.size(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  std::int64_t determinant() const { return determinant_; }
  bool is_unimodular() const { return determinant_ == 1 || determinant_ == -1; }

  std::optional<std::size_t> index_of(std::string_view label) const;
  LatticeVector basis_vector(std::string_view label) const;

  // Attaches an alternative basis; it must be unimodular over Z.
  IntLattice with_alternate_basis(BasisChange change) const;
  const std::optional<BasisChange>& alternate_basis() const { return alternate_; }
  // Gram matrix of the alternate basis (B G B^T).
  IntMatrix alternate_gram() const;

  IntLattice renamed(std::string name) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.name_ == b.name_ && a.labels_ == b.labels_ && a.gram_ == b.gram_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  IntMatrix gram_;
  std::int64_t determinant_ = 1;
  std::optional<BasisChange> alternate_;
};

IntLattice hyperbolic_lattice(std::string name = "H");
IntLattice diagonal_lattice(std::string name, const std::vector<std::int64_t>& entries);
// Block sum; alternate bases are summed too (identity on a side without one).
IntLattice direct_sum(const IntLattice& a, const IntLattice& b, std::string name = {});

// Drops basis vectors spanning an orthogonal summand. Alternate basis vectors
// named like dropped labels must be those same raw vectors.
IntLattice remove_summand(const IntLattice& l, const std::vector<std::string>& labels, std::string name);

// v^T * gram * w. Throws InputError on dimension mismatch.
std::int64_t pairing(const IntLattice& l, const LatticeVector& v, const LatticeVector& w);
inline std::int64_t square(const IntLattice& l, const LatticeVector& v) { return pairing(l, v, v); }

// gram * K: the values of K on each basis vector.
std::vector<std::int64_t> evaluations(const IntLattice& l, const LatticeVector& k);
// The unique vector with the given basis evaluations (unimodular lattices only).
LatticeVector from_evaluations(const IntLattice& l, const std::vector<std::int64_t>& evals);

// K.x == x.x (mod 2) for every basis vector x. Requires a unimodular lattice.
bool is_characteristic(const IntLattice& l, const LatticeVector& k);

enum class Parity { kEven, kOdd };

struct SignatureParity {
  std::int64_t signature = 0;
  Parity parity = Parity::kEven;
  std::size_t positive = 0;
  std::size_t negative = 0;
};

// Exact inertia by congruence diagonalization over Q. Rejects degenerate forms.
SignatureParity signature_and_parity(const IntLattice& l);

struct SurfaceClass {
  std::string label;
  LatticeVector klass;
  std::int64_t genus = 0;
  std::int64_t square = 0;
};

SurfaceClass make_surface(const IntLattice& l, std::string label, LatticeVector klass,
                          std::int64_t genus);

// Smooths `positive_intersections` transverse positive intersection points of
// two embedded surfaces. The count must equal their pairing.
SurfaceClass combine_surfaces(const IntLattice& l, const SurfaceClass& s1, const SurfaceClass& s2,
                              std::int64_t positive_intersections);

}  // namespace fourcalc::lattice
