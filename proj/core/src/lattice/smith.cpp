#include "fourcalc/lattice/smith.hpp"

#include <gmpxx.h>

#include <optional>
#include <utility>

#include "fourcalc/errors.hpp"

namespace fourcalc::lattice {
namespace {

// Row-major matrix of arbitrary-precision integers.
struct BigMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> data;

  BigMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static BigMatrix from(const IntMatrix& m) {
    BigMatrix b(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = static_cast<long>(m(i, j));
    return b;
  }
  static BigMatrix identity(std::size_t n) {
    BigMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) b(i, i) = 1;
    return b;
  }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  void add_row(std::size_t target, std::size_t source, const mpz_class& f) {
    for (std::size_t c = 0; c < cols; ++c) (*this)(target, c) += f * (*this)(source, c);
  }
  void add_col(std::size_t target, std::size_t source, const mpz_class& f) {
    for (std::size_t r = 0; r < rows; ++r) (*this)(r, target) += f * (*this)(r, source);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  IntMatrix narrow() const {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const mpz_class& v = (*this)(i, j);
        if (!v.fits_slong_p()) throw ResourceError("smith_normal_form: entry exceeds int64");
        m(i, j) = v.get_si();
      }
    return m;
  }
};

// Tracks left/right transforms and their inverses alongside the working
// matrix so that every elementary step stays invertible over Z.
struct Reducer {
  BigMatrix a, p, p_inv, q, q_inv;
  bool track;

  Reducer(const IntMatrix& m, bool track_transforms)
      : a(BigMatrix::from(m)),
        p(BigMatrix::identity(track_transforms ? m.rows() : 0)),
        p_inv(BigMatrix::identity(track_transforms ? m.rows() : 0)),
        q(BigMatrix::identity(track_transforms ? m.cols() : 0)),
        q_inv(BigMatrix::identity(track_transforms ? m.cols() : 0)),
        track(track_transforms) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    if (!track) return;
    p.swap_rows(i, j);
    p_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    if (!track) return;
    q.swap_cols(i, j);
    q_inv.swap_rows(i, j);
  }
  // row_target += f * row_source
  void add_row(std::size_t target, std::size_t source, const mpz_class& f) {
    a.add_row(target, source, f);
    if (!track) return;
    p.add_row(target, source, f);
    p_inv.add_col(source, target, -f);
  }
  // col_target += f * col_source
  void add_col(std::size_t target, std::size_t source, const mpz_class& f) {
    a.add_col(target, source, f);
    if (!track) return;
    q.add_col(target, source, f);
    q_inv.add_row(source, target, -f);
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    if (!track) return;
    p.negate_row(r);
    p_inv.negate_col(r);
  }
};

// Nearest-integer quotient, keeping remainders in [-|b|/2, |b|/2].
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) > abs(b)) q += 1;
  return q;
}

// Diagonalizes r.a in place; returns the number of nonzero invariants.
std::size_t reduce(Reducer& r) {
  const std::size_t rows = r.a.rows;
  const std::size_t cols = r.a.cols;
  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> first;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const mpz_class& v = r.a(i, j);
        if (v != 0 && (!first || abs(v) < abs(r.a(first->first, first->second)))) first = {i, j};
      }
    if (!first) break;
    r.swap_rows(t, first->first);
    r.swap_cols(t, first->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (r.a(i, t) == 0) continue;
        r.add_row(i, t, -nearest_quotient(r.a(i, t), r.a(t, t)));
        if (r.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (r.a(t, j) == 0) continue;
        r.add_col(j, t, -nearest_quotient(r.a(t, j), r.a(t, t)));
        if (r.a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t onto the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (r.a(i, t) != 0 && abs(r.a(i, t)) < abs(r.a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (r.a(t, j) != 0 && abs(r.a(t, j)) < abs(r.a(bi, bj))) bi = t, bj = j;
        r.swap_rows(t, bi);
        r.swap_cols(t, bj);
        continue;
      }
      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(r.a(i, j).get_mpz_t(), r.a(t, t).get_mpz_t())) {
            r.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (r.a(t, t) < 0) r.negate_row(t);
  }
  return t;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer r(m, true);
  const std::size_t t = reduce(r);
  SmithForm out;
  out.diagonal = r.a.narrow();
  for (std::size_t i = 0; i < t; ++i) out.invariants.push_back(out.diagonal(i, i));
  out.left = r.p.narrow();
  out.left_inverse = r.p_inv.narrow();
  out.right = r.q.narrow();
  out.right_inverse = r.q_inv.narrow();
  return out;
}

std::vector<std::int64_t> smith_invariants(const IntMatrix& m) {
  Reducer r(m, false);
  const std::size_t t = reduce(r);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < t; ++i) {
    if (!r.a(i, i).fits_slong_p()) throw ResourceError("smith_invariants: invariant exceeds int64");
    out.push_back(r.a(i, i).get_si());
  }
  return out;
}

}  // namespace fourcalc::lattice
