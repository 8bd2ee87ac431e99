#include "fourcalc/lattice/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

#include "fourcalc/errors.hpp"

namespace fourcalc::lattice {

LatticeVector LatticeVector::operator-() const {
  LatticeVector out = *this;
  for (auto& c : out.coords) c = checked_sub(0, c);
  return out;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw InputError("vector dimension mismatch");
  LatticeVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = checked_add(a[i], b[i]);
  return out;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }

LatticeVector operator*(std::int64_t s, const LatticeVector& v) {
  LatticeVector out = v;
  for (auto& c : out.coords) c = checked_mul(s, c);
  return out;
}

IntLattice::IntLattice(std::string name, std::vector<std::string> basis_labels, IntMatrix gram,
                       Unimodular check)
    : name_(std::move(name)), labels_(std::move(basis_labels)), gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() != labels_.size()) {
    throw InputError("gram matrix must be rank x rank with one label per basis vector");
  }
  if (!gram_.is_symmetric()) throw InputError("gram matrix is not symmetric");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate basis label in lattice '" + name_ + "'");
  }
  determinant_ = lattice::determinant(gram_);
  if (check == Unimodular::kRequired && !is_unimodular()) {
    std::ostringstream os;
    os << "lattice '" << name_ << "' flagged unimodular but det = " << determinant_;
    throw InputError(os.str());
  }
}

std::optional<std::size_t> IntLattice::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

LatticeVector IntLattice::basis_vector(std::string_view label) const {
  const auto idx = index_of(label);
  if (!idx) throw InputError("unknown basis label '" + std::string(label) + "'");
  return LatticeVector::unit(rank(), *idx);
}

IntLattice IntLattice::with_alternate_basis(BasisChange change) const {
  if (change.vectors.rows() != rank() || change.vectors.cols() != rank() ||
      change.labels.size() != rank()) {
    throw InputError("alternate basis has wrong dimensions");
  }
  const std::int64_t det = lattice::determinant(change.vectors);
  if (det != 1 && det != -1) throw InputError("alternate basis is not a Z-basis");
  IntLattice out = *this;
  out.alternate_ = std::move(change);
  return out;
}

IntMatrix IntLattice::alternate_gram() const {
  if (!alternate_) return gram_;
  return alternate_->vectors * gram_ * alternate_->vectors.transpose();
}

IntLattice IntLattice::renamed(std::string name) const {
  IntLattice out = *this;
  out.name_ = std::move(name);
  return out;
}

IntLattice hyperbolic_lattice(std::string name) {
  return IntLattice(std::move(name), {"h1", "h2"}, IntMatrix{{0, 1}, {1, 0}});
}

IntLattice diagonal_lattice(std::string name, const std::vector<std::int64_t>& entries) {
  IntMatrix g(entries.size(), entries.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    g(i, i) = entries[i];
    labels.push_back("e" + std::to_string(i + 1));
  }
  return IntLattice(std::move(name), std::move(labels), std::move(g));
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b, std::string name) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  std::vector<std::string> labels = a.basis_labels();
  for (std::string l : b.basis_labels()) {
    while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "'";
    labels.push_back(std::move(l));
  }
  if (name.empty()) name = a.name() + "+" + b.name();
  const Unimodular check = a.is_unimodular() && b.is_unimodular() ? Unimodular::kRequired : Unimodular::kUnchecked;
  IntLattice out(std::move(name), labels, std::move(g), check);
  if (!a.alternate_basis() && !b.alternate_basis()) return out;
  BasisChange change{{}, IntMatrix(n, n)};
  auto place = [&](const IntLattice& part, std::size_t offset, std::size_t label_offset) {
    if (const auto& alt = part.alternate_basis()) {
      for (std::size_t i = 0; i < part.rank(); ++i) {
        change.labels.push_back(alt->labels[i]);
        for (std::size_t j = 0; j < part.rank(); ++j) change.vectors(offset + i, offset + j) = alt->vectors(i, j);
      }
    } else {
      for (std::size_t i = 0; i < part.rank(); ++i) {
        change.labels.push_back(labels[label_offset + i]);
        change.vectors(offset + i, offset + i) = 1;
      }
    }
  };
  place(a, 0, 0);
  place(b, a.rank(), a.rank());
  return out.with_alternate_basis(std::move(change));
}

IntLattice remove_summand(const IntLattice& l, const std::vector<std::string>& labels, std::string name) {
  std::vector<bool> dropped(l.rank(), false);
  for (const auto& label : labels) {
    const auto idx = l.index_of(label);
    if (!idx) throw InputError("remove_summand: unknown basis label '" + label + "'");
    dropped[*idx] = true;
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (!dropped[i]) kept.push_back(i);
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j : kept)
      if (dropped[i] && l.gram()(i, j) != 0) {
        throw InputError("remove_summand: '" + l.basis_labels()[i] + "' is not orthogonal to '" +
                         l.basis_labels()[j] + "'");
      }
  IntMatrix g(kept.size(), kept.size());
  std::vector<std::string> kept_labels;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    kept_labels.push_back(l.basis_labels()[kept[a]]);
    for (std::size_t b = 0; b < kept.size(); ++b) g(a, b) = l.gram()(kept[a], kept[b]);
  }
  IntLattice out(std::move(name), std::move(kept_labels), std::move(g),
                 l.is_unimodular() ? Unimodular::kRequired : Unimodular::kUnchecked);
  const auto& alt = l.alternate_basis();
  if (!alt) return out;
  BasisChange change{{}, IntMatrix(kept.size(), kept.size())};
  std::size_t row = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    const bool named_dropped = std::find(labels.begin(), labels.end(), alt->labels[i]) != labels.end();
    if (named_dropped) {
      const std::size_t raw = *l.index_of(alt->labels[i]);
      for (std::size_t j = 0; j < l.rank(); ++j)
        if (alt->vectors(i, j) != (j == raw ? 1 : 0)) {
          throw InputError("remove_summand: alternate vector '" + alt->labels[i] + "' is not the raw basis vector");
        }
      continue;
    }
    if (row >= kept.size()) throw InputError("remove_summand: alternate basis does not split");
    for (std::size_t j = 0; j < l.rank(); ++j)
      if (dropped[j] && alt->vectors(i, j) != 0) {
        throw InputError("remove_summand: alternate vector '" + alt->labels[i] + "' meets a removed summand");
      }
    change.labels.push_back(alt->labels[i]);
    for (std::size_t b = 0; b < kept.size(); ++b) change.vectors(row, b) = alt->vectors(i, kept[b]);
    ++row;
  }
  if (row != kept.size()) throw InputError("remove_summand: alternate basis does not split");
  return out.with_alternate_basis(std::move(change));
}

std::int64_t pairing(const IntLattice& l, const LatticeVector& v, const LatticeVector& w) {
  if (v.size() != l.rank() || w.size() != l.rank()) {
    throw InputError("vector dimension does not match lattice rank");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (v[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < l.rank(); ++j) row = checked_add(row, checked_mul(l.gram()(i, j), w[j]));
    total = checked_add(total, checked_mul(v[i], row));
  }
  return total;
}

std::vector<std::int64_t> evaluations(const IntLattice& l, const LatticeVector& k) {
  if (k.size() != l.rank()) throw InputError("vector dimension does not match lattice rank");
  std::vector<std::int64_t> out(l.rank(), 0);
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j)
      out[i] = checked_add(out[i], checked_mul(l.gram()(i, j), k[j]));
  return out;
}

LatticeVector from_evaluations(const IntLattice& l, const std::vector<std::int64_t>& evals) {
  if (evals.size() != l.rank()) throw InputError("evaluation vector has wrong length");
  if (!l.is_unimodular()) throw InputError("from_evaluations requires a unimodular lattice");
  const IntMatrix inv = unimodular_inverse(l.gram());
  LatticeVector out = LatticeVector::zero(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j)
      out[i] = checked_add(out[i], checked_mul(inv(i, j), evals[j]));
  return out;
}

bool is_characteristic(const IntLattice& l, const LatticeVector& k) {
  if (!l.is_unimodular()) throw InputError("is_characteristic requires a unimodular lattice");
  const auto ev = evaluations(l, k);
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (((ev[i] - l.gram()(i, i)) % 2) != 0) return false;
  }
  return true;
}

SignatureParity signature_and_parity(const IntLattice& l) {
  const std::size_t n = l.rank();
  std::vector<mpq_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(l.gram()(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * n + j]; };

  SignatureParity out;
  // Symmetric elimination: each step is a congruence A -> E A E^T, so the
  // inertia of the pivots equals the inertia of the form.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (at(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // No usable diagonal entry: combine two basis vectors with a nonzero
      // cross term so that their sum has nonzero square.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (at(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) throw InputError("lattice '" + l.name() + "' is degenerate");
      for (std::size_t c = 0; c < n; ++c) at(pi, c) += at(pj, c);
      for (std::size_t r = 0; r < n; ++r) at(r, pi) += at(r, pj);
      pivot = pi;
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, pivot), at(r, k));
    }
    const mpq_class d = at(k, k);
    if (d > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const mpq_class f = at(i, k) / d;
      for (std::size_t c = k; c < n; ++c) at(i, c) -= f * at(k, c);
      for (std::size_t r = k; r < n; ++r) at(r, i) -= f * at(r, k);
    }
  }
  out.signature = static_cast<std::int64_t>(out.positive) - static_cast<std::int64_t>(out.negative);
  out.parity = Parity::kEven;
  for (std::size_t i = 0; i < n; ++i)
    if (l.gram()(i, i) % 2 != 0) out.parity = Parity::kOdd;
  return out;
}

SurfaceClass make_surface(const IntLattice& l, std::string label, LatticeVector klass,
                          std::int64_t genus) {
  if (genus < 0) throw InputError("surface genus must be non-negative");
  SurfaceClass s;
  s.square = square(l, klass);
  s.label = std::move(label);
  s.klass = std::move(klass);
  s.genus = genus;
  return s;
}

SurfaceClass combine_surfaces(const IntLattice& l, const SurfaceClass& s1, const SurfaceClass& s2,
                              std::int64_t positive_intersections) {
  if (positive_intersections < 1) {
    throw InputError("combine_surfaces needs at least one positive intersection to smooth");
  }
  const std::int64_t cross = pairing(l, s1.klass, s2.klass);
  if (cross != positive_intersections) {
    std::ostringstream os;
    os << "surfaces " << s1.label << " and " << s2.label << " pair to " << cross << ", not "
       << positive_intersections;
    throw InputError(os.str());
  }
  return make_surface(l, s1.label + "+" + s2.label, s1.klass + s2.klass,
                      s1.genus + s2.genus + positive_intersections - 1);
}

}  // namespace fourcalc::lattice
