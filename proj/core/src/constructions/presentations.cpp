#include "fourcalc/constructions/presentations.hpp"

#include <string>

#include "fourcalc/errors.hpp"

namespace fourcalc::constructions {
namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw InputError(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
}

std::string power(int n) { return n == 1 ? std::string() : "^" + std::to_string(n); }

// Relations of the w2 presentation over generator names s1 t1 s2 t2
// (uppercase when `upper`).
std::string w2_relators(int n, bool upper) {
  const std::string s1 = upper ? "S1" : "s1", t1 = upper ? "T1" : "t1";
  const std::string s2 = upper ? "S2" : "s2", t2 = upper ? "T2" : "t2";
  return "[" + s1 + "," + s2 + "] [" + t1 + "," + s2 + "] [" + t2 + "^-1," + t1 + "^-1]*" + s1 + "^-1 [" + t2 +
         "^-1," + s1 + "^-1]" + power(n) + "*" + s2 + "^-1 [" + s1 + "," + t1 + "] [" + s2 + "," + t2 + "]";
}

std::string w1_relators(int n, bool upper) {
  const std::string s1 = upper ? "S1" : "s1", t1 = upper ? "T1" : "t1";
  const std::string s2 = upper ? "S2" : "s2", t2 = upper ? "T2" : "t2";
  return "[" + s1 + "," + s2 + "] [" + t1 + "," + s2 + "] [" + t2 + "^-1," + t1 + "^-1]*" + s1 + "^-1 [" + t2 +
         "^-1," + s1 + "^-1]" + power(n) + "*" + s2 + "^-1 mu*[" + s2 + "," + t2 + "] [" + s1 + "^2*mu^-1," + t1 +
         "]*mu^-1";
}

}  // namespace

fpgroup::Presentation v0_presentation(int n) {
  require_positive(n, "v0_presentation");
  return fpgroup::parse_presentation("gens: x y a b; rels: [x,a] [y,a] [b^-1,y^-1]*x^-1 [b^-1,x^-1]" + power(n) +
                                     "*a^-1");
}

fpgroup::Presentation w2_presentation(int n) {
  require_positive(n, "w2_presentation");
  return fpgroup::parse_presentation("gens: s1 t1 s2 t2; rels: " + w2_relators(n, false));
}

fpgroup::Presentation xn_unglued(int n) {
  require_positive(n, "xn_certificate");
  return fpgroup::parse_presentation("gens: s1 t1 s2 t2 S1 T1 S2 T2; rels: " + w2_relators(n, false) + " " +
                                     w2_relators(n, true));
}

fpgroup::Presentation xn_certificate(int n) {
  require_positive(n, "xn_certificate");
  return fpgroup::parse_presentation("gens: s1 t1 s2 t2 S1 T1 S2 T2; rels: " + w2_relators(n, false) + " " +
                                     w2_relators(n, true) + " s1*T2 t1*S2 s2*T1 t2*S1");
}

fpgroup::Presentation yn_certificate(int n) {
  require_positive(n, "yn_certificate");
  return fpgroup::parse_presentation(
      "gens: s1 t1 s2 t2 S1 T1 S2 T2 mu; rels: " + w1_relators(n, false) + " " + w1_relators(n, true) +
      " [mu,t1] [mu,s2] [mu,t2] [mu,s1^2] [mu,T1] [mu,S2] [mu,T2] [mu,S1^2]"
      " s1^2*mu^-2*T2 t1*S2*mu s2*T1*mu t2*mu^-1*S1^2*mu^-1");
}

std::vector<fpgroup::Word> yn_relative_subgroup(const fpgroup::Presentation& yn) {
  return {yn.word("s1"), yn.word("s2"), yn.word("mu"), yn.word("t2")};
}

}  // namespace fourcalc::constructions
