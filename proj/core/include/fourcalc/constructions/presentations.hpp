#pragma once

#include <vector>

#include "fourcalc/fpgroup/presentation.hpp"

namespace fourcalc::constructions {

// <x,y,a,b | [x,a], [y,a], [b^-1,y^-1] x^-1, [b^-1,x^-1]^n a^-1>
fpgroup::Presentation v0_presentation(int n);

// v0 with the commutators [x,y] and [a,b] added, written in s1 t1 s2 t2
// (x=s1, y=t1, a=s2, b=t2).
fpgroup::Presentation w2_presentation(int n);

// Two copies of the w2 relations glued by s1 T2, t1 S2, s2 T1, t2 S1.
fpgroup::Presentation xn_certificate(int n);
// The same presentation without the gluing relators.
fpgroup::Presentation xn_unglued(int n);

// Two copies of the w1 relations sharing mu, the mu-commutation relators and
// the gluing relators.
fpgroup::Presentation yn_certificate(int n);

// Subgroup generators {s1, s2, mu, t2} of yn_certificate(n).
std::vector<fpgroup::Word> yn_relative_subgroup(const fpgroup::Presentation& yn);

}  // namespace fourcalc::constructions
