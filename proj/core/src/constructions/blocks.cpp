#include "fourcalc/constructions/blocks.hpp"

#include "fourcalc/errors.hpp"

namespace fourcalc::constructions {

using lattice::IntLattice;
using lattice::IntMatrix;
using lattice::LatticeVector;
using lattice::SurfaceClass;

nlohmann::json to_json(const AxiomRecord& a) {
  return {{"id", a.id}, {"justification", a.justification}, {"payload", a.payload}};
}

sw::AdjunctionConfig Block::adjunction_config() const {
  sw::AdjunctionConfig cfg;
  cfg.surfaces = surfaces;
  cfg.chi = profile.chi;
  cfg.sigma = profile.sigma;
  return cfg;
}

const std::vector<std::string>& block_ids() {
  static const std::vector<std::string> ids{"U", "R", "vanishing-P", "vanishing-Q-odd", "vanishing-Q-even"};
  return ids;
}

IntLattice fiber_sum_lattice(int blowups) {
  if (blowups != 1 && blowups != 2) throw InputError("fiber_sum_lattice: expected 1 or 2 blow-ups");
  const std::size_t q_count = blowups == 2 ? 4 : 2;
  const std::int64_t x_dot_q = blowups == 2 ? 1 : 2;
  const std::int64_t y_weight = x_dot_q;  // e_i = y_weight * y - q_i is orthogonal to x, y
  std::vector<std::string> labels;
  for (int i = 1; i <= 4; ++i) {
    labels.push_back("d" + std::to_string(i));
    labels.push_back("D" + std::to_string(i));
  }
  labels.push_back("x");
  labels.push_back("y");
  for (std::size_t i = 1; i <= q_count; ++i) labels.push_back("q" + std::to_string(i));
  const std::size_t n = labels.size();
  const std::size_t x = 8, y = 9;
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < 8; i += 2) g(i, i + 1) = g(i + 1, i) = 1;
  g(x, y) = g(y, x) = 1;
  for (std::size_t i = 0; i < q_count; ++i) {
    const std::size_t q = 10 + i;
    g(q, q) = -1;
    g(x, q) = g(q, x) = x_dot_q;
  }
  IntLattice l(blowups == 2 ? "U" : "R", labels, g, lattice::Unimodular::kRequired);

  lattice::BasisChange alt{{}, IntMatrix::identity(n)};
  alt.labels = labels;
  for (std::size_t i = 0; i < q_count; ++i) {
    const std::size_t q = 10 + i;
    alt.labels[q] = "e" + std::to_string(i + 1);
    alt.vectors(q, q) = -1;
    alt.vectors(q, y) = y_weight;
  }
  return l.with_alternate_basis(std::move(alt));
}

namespace {

manifold::ManifoldProfile blown_up_torus(int blowups) {
  auto p = manifold::named_profile("T4#" + std::string(blowups == 2 ? "2" : "") + "CP2bar");
  p.flags.insert(manifold::surface_flag(2));
  return p;
}

Block fiber_sum_block(int blowups) {
  Block b;
  const bool is_u = blowups == 2;
  b.id = is_u ? "U" : "R";
  const auto piece = blown_up_torus(blowups);
  b.profile = manifold::fiber_sum(piece, piece, 2, b.id);
  auto l = std::make_shared<const IntLattice>(fiber_sum_lattice(blowups));
  b.lattice = l;
  for (int i = 1; i <= 4; ++i) {
    for (const char* prefix : {"d", "D"}) {
      const std::string label = prefix + std::to_string(i);
      b.surfaces.push_back(lattice::make_surface(*l, label, l->basis_vector(label), 1));
    }
  }
  const SurfaceClass sx = lattice::make_surface(*l, "x", l->basis_vector("x"), 2);
  const SurfaceClass sy = lattice::make_surface(*l, "y", l->basis_vector("y"), 2);
  b.surfaces.push_back(sx);
  b.surfaces.push_back(sy);
  const std::size_t q_count = is_u ? 4 : 2;
  const std::int64_t q_genus = is_u ? 1 : 2;
  const std::int64_t crossings = is_u ? 1 : 2;
  for (std::size_t i = 1; i <= q_count; ++i) {
    const std::string label = "q" + std::to_string(i);
    const SurfaceClass sq = lattice::make_surface(*l, label, l->basis_vector(label), q_genus);
    b.surfaces.push_back(sq);
    SurfaceClass combined = lattice::combine_surfaces(*l, sx, sq, crossings);
    combined.label = "x+" + label;
    b.surfaces.push_back(std::move(combined));
  }
  b.axioms.push_back({"symplectic-seed",
                      "a symplectic manifold with b2+ > 1 has SW(+-c1) = +-1 (Taubes)",
                      {{"manifold", b.id}, {"value", 1}}});
  b.axioms.push_back({"genus-2-fiber",
                      "T^4 # " + std::string(is_u ? "2" : "") +
                          "CP2bar contains a square-0 genus-2 surface used for the fiber sum",
                      {{"genus", 2}}});
  b.axioms.push_back({"intersection-normalization",
                      "tori and surfaces oriented so that x.q_i = " + std::to_string(crossings),
                      {{"x.q", crossings}, {"q genus", q_genus}}});
  return b;
}

}  // namespace

Block build_block(std::string_view id) {
  if (id == "U") return fiber_sum_block(2);
  if (id == "R") return fiber_sum_block(1);
  const bool p_family = id == "vanishing-P";
  const bool q_odd = id == "vanishing-Q-odd";
  const bool q_even = id == "vanishing-Q-even";
  if (!p_family && !q_odd && !q_even) throw InputError("unknown block '" + std::string(id) + "'");
  Block b = fiber_sum_block(p_family ? 2 : 1);
  b.id = std::string(id);
  const sw::SurgerySpec slope_zero{"d1", 0, 1, false, std::nullopt};
  b.profile = manifold::torus_surgery_profile(b.profile, slope_zero, b.id);
  const IntLattice& l = *b.lattice;
  nlohmann::json payload = {{"F01", 0}};
  if (q_even) {
    b.surfaces.push_back(lattice::make_surface(l, "y1", 2 * l.basis_vector("y"), 2));
    b.axioms.push_back({b.id,
                        "slope-0 surgery on an even-indexed torus yields a sphere meeting x twice; tubing "
                        "gives a square-0 genus-2 class y1 = 2y with y1.x = 2, so every SW invariant vanishes",
                        payload});
  } else {
    b.surfaces.push_back(lattice::make_surface(l, "y-torus", l.basis_vector("y"), 1));
    b.axioms.push_back({p_family ? "vanishing-P" : "vanishing-Q-odd",
                        "slope-0 surgery yields a square-0 sphere meeting x once; tubing gives a square-0 "
                        "torus in class y with y.x = 1, so every SW invariant vanishes",
                        payload});
  }
  return b;
}

}  // namespace fourcalc::constructions
