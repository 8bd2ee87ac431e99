#include "fourcalc/fpgroup/abelianization.hpp"

#include <sstream>

#include "fourcalc/lattice/smith.hpp"

namespace fourcalc::fpgroup {

lattice::IntMatrix exponent_matrix(const Presentation& p) {
  lattice::IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (Letter l : p.relators()[r]) m(r, l.generator()) += l.sign();
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  const auto invariants = lattice::smith_invariants(exponent_matrix(p));
  AbelianInvariants out;
  out.free_rank = static_cast<std::int64_t>(p.generator_count()) - static_cast<std::int64_t>(invariants.size());
  for (std::int64_t d : invariants)
    if (d > 1) out.torsion_factors.push_back(d);
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  if (a.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (a.free_rank > 0) {
    os << "Z";
    if (a.free_rank > 1) os << '^' << a.free_rank;
    first = false;
  }
  for (std::int64_t t : a.torsion_factors) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

}  // namespace fourcalc::fpgroup
