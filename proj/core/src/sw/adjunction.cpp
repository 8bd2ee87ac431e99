#include "fourcalc/sw/adjunction.hpp"

#include <algorithm>
#include <cstdlib>

#include "fourcalc/errors.hpp"

namespace fourcalc::sw {

using lattice::checked_add;
using lattice::checked_mul;
using lattice::IntMatrix;

std::optional<std::int64_t> formal_dimension(std::int64_t k_squared, std::int64_t chi, std::int64_t sigma) {
  const std::int64_t numerator =
      lattice::checked_sub(lattice::checked_sub(k_squared, checked_mul(3, sigma)), checked_mul(2, chi));
  if (numerator % 4 != 0) return std::nullopt;
  return numerator / 4;
}

bool adjunction_admits(const IntLattice& l, const LatticeVector& k, const SurfaceClass& s) {
  if (s.genus <= 0 || s.square < 0) return true;
  return 2 * s.genus - 2 >= s.square + std::llabs(lattice::pairing(l, k, s.klass));
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// sum_j coeff[j] * v[j] in [-bound, bound]
struct LinearConstraint {
  std::vector<std::int64_t> coeff;
  std::int64_t bound = 0;
};

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  int parity = 0;

  bool empty() const { return lo > hi; }
  std::uint64_t count() const { return empty() ? 0 : static_cast<std::uint64_t>((hi - lo) / 2 + 1); }
  // Snap both ends onto the parity class.
  void normalize() {
    if (((lo % 2) + 2) % 2 != parity) ++lo;
    if (((hi % 2) + 2) % 2 != parity) --hi;
  }
};

// Bounds-consistency propagation. Returns false on an empty range.
bool propagate(std::vector<Range>& ranges, const std::vector<LinearConstraint>& constraints) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : constraints) {
      std::int64_t min_sum = 0, max_sum = 0;
      for (std::size_t j = 0; j < ranges.size(); ++j) {
        if (c.coeff[j] == 0) continue;
        const std::int64_t a = checked_mul(c.coeff[j], ranges[j].lo);
        const std::int64_t b = checked_mul(c.coeff[j], ranges[j].hi);
        min_sum = checked_add(min_sum, std::min(a, b));
        max_sum = checked_add(max_sum, std::max(a, b));
      }
      if (min_sum > c.bound || max_sum < -c.bound) return false;
      for (std::size_t j = 0; j < ranges.size(); ++j) {
        const std::int64_t cj = c.coeff[j];
        if (cj == 0) continue;
        const std::int64_t a = cj * ranges[j].lo, b = cj * ranges[j].hi;
        const std::int64_t rest_min = min_sum - std::min(a, b);
        const std::int64_t rest_max = max_sum - std::max(a, b);
        // -bound - rest_max <= cj * v <= bound - rest_min
        const std::int64_t low = -c.bound - rest_max, high = c.bound - rest_min;
        std::int64_t lo = cj > 0 ? ceil_div(low, cj) : ceil_div(high, cj);
        std::int64_t hi = cj > 0 ? floor_div(high, cj) : floor_div(low, cj);
        Range r = ranges[j];
        r.lo = std::max(r.lo, lo);
        r.hi = std::min(r.hi, hi);
        r.normalize();
        if (r.empty()) return false;
        if (r.lo != ranges[j].lo || r.hi != ranges[j].hi) {
          ranges[j] = r;
          changed = true;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<LatticeVector> enumerate_basic_candidates(const AdjunctionConfig& cfg, const IntLattice& l) {
  EnumerationStats stats;
  return enumerate_basic_candidates(cfg, l, stats);
}

std::vector<LatticeVector> enumerate_basic_candidates(const AdjunctionConfig& cfg, const IntLattice& l,
                                                      EnumerationStats& stats) {
  if (cfg.eval_bound < 0) throw InputError("enumerate_basic_candidates: eval_bound must be non-negative");
  if (!l.is_unimodular()) throw InputError("enumerate_basic_candidates: lattice must be unimodular");
  if (l.rank() > 24) throw InputError("enumerate_basic_candidates: rank above 24 is not supported");
  const std::size_t n = l.rank();
  const IntMatrix basis = l.alternate_basis() ? l.alternate_basis()->vectors : IntMatrix::identity(n);
  const IntMatrix basis_inverse = lattice::unimodular_inverse(basis);
  const IntMatrix gram = l.alternate_gram();
  const IntMatrix gram_inverse = lattice::unimodular_inverse(gram);

  std::vector<Range> ranges(n);
  for (std::size_t j = 0; j < n; ++j) {
    ranges[j] = {-cfg.eval_bound, cfg.eval_bound, static_cast<int>(((gram(j, j) % 2) + 2) % 2)};
    ranges[j].normalize();
  }

  // A surface with raw coords s = c * basis has K.s = sum_j c_j v_j.
  std::vector<LinearConstraint> constraints;
  for (const auto& s : cfg.surfaces) {
    if (s.klass.size() != n) throw InputError("surface '" + s.label + "' has wrong rank");
    if (s.genus <= 0 || s.square < 0) continue;
    LinearConstraint c{std::vector<std::int64_t>(n, 0), 2 * s.genus - 2 - s.square};
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) c.coeff[j] = checked_add(c.coeff[j], checked_mul(s.klass[i], basis_inverse(i, j)));
    if (c.bound < 0) return {};
    constraints.push_back(std::move(c));
  }
  for (const auto& r : ranges)
    if (r.empty()) return {};
  if (!propagate(ranges, constraints)) return {};

  stats.residual_box = 1;
  for (const auto& r : ranges) {
    const std::uint64_t c = r.count();
    if (c != 0 && stats.residual_box > cfg.max_box / c) {
      throw ResourceError("enumerate_basic_candidates: residual search box exceeds " + std::to_string(cfg.max_box));
    }
    stats.residual_box *= c;
  }
  if (stats.residual_box > cfg.max_box) {
    throw ResourceError("enumerate_basic_candidates: residual search box exceeds " + std::to_string(cfg.max_box));
  }

  std::vector<LatticeVector> out;
  std::vector<std::int64_t> v(n);
  std::vector<std::int64_t> partial(constraints.size(), 0);
  // Remaining attainable range of each constraint after position j.
  std::vector<std::vector<std::int64_t>> tail_min(constraints.size(), std::vector<std::int64_t>(n + 1, 0));
  auto tail_max = tail_min;
  for (std::size_t c = 0; c < constraints.size(); ++c)
    for (std::size_t j = n; j-- > 0;) {
      const std::int64_t a = constraints[c].coeff[j] * ranges[j].lo, b = constraints[c].coeff[j] * ranges[j].hi;
      tail_min[c][j] = tail_min[c][j + 1] + std::min(a, b);
      tail_max[c][j] = tail_max[c][j + 1] + std::max(a, b);
    }

  auto accept = [&]() {
    ++stats.points_visited;
    // k = gram^-1 v are the alternate-basis coordinates, K^2 = v.k
    std::vector<std::int64_t> k(n, 0);
    std::int64_t k_squared = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) k[i] = checked_add(k[i], checked_mul(gram_inverse(i, j), v[j]));
      k_squared = checked_add(k_squared, checked_mul(v[i], k[i]));
    }
    const auto d = formal_dimension(k_squared, cfg.chi, cfg.sigma);
    if (!d || *d < 0) return;
    LatticeVector raw = LatticeVector::zero(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) raw[j] = checked_add(raw[j], checked_mul(k[i], basis(i, j)));
    out.push_back(std::move(raw));
  };

  auto search = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      accept();
      return;
    }
    for (std::int64_t x = ranges[j].lo; x <= ranges[j].hi; x += 2) {
      bool feasible = true;
      for (std::size_t c = 0; c < constraints.size() && feasible; ++c) {
        const std::int64_t s = partial[c] + constraints[c].coeff[j] * x;
        feasible = s + tail_min[c][j + 1] <= constraints[c].bound && s + tail_max[c][j + 1] >= -constraints[c].bound;
      }
      if (!feasible) continue;
      v[j] = x;
      for (std::size_t c = 0; c < constraints.size(); ++c) partial[c] += constraints[c].coeff[j] * x;
      self(self, j + 1);
      for (std::size_t c = 0; c < constraints.size(); ++c) partial[c] -= constraints[c].coeff[j] * x;
    }
  };
  search(search, 0);

  // Independent re-check in raw coordinates.
  for (const auto& k : out) {
    const bool ok = lattice::is_characteristic(l, k) &&
                    std::all_of(cfg.surfaces.begin(), cfg.surfaces.end(),
                                [&](const SurfaceClass& s) { return adjunction_admits(l, k, s); });
    if (!ok) throw std::logic_error("enumerate_basic_candidates: candidate failed re-verification");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fourcalc::sw
