#include "fourcalc/manifold/homeo.hpp"

#include "fourcalc/errors.hpp"

namespace fourcalc::manifold {

std::string to_string(const HomeoClass& c) {
  switch (c.kind) {
    case HomeoClass::Kind::kSimplyConnectedOdd:
      return "SimplyConnectedOdd(" + std::to_string(c.b2plus) + "," + std::to_string(c.b2minus) + ")";
    case HomeoClass::Kind::kSimplyConnectedEven:
      return "SimplyConnectedEven(" + std::to_string(c.b2plus) + "," + std::to_string(c.b2minus) + ")";
    case HomeoClass::Kind::kZ2Definite:
      return "Z2Definite(" + std::to_string(c.b2) + "," + (c.orientation > 0 ? "+" : "-") + ")";
    case HomeoClass::Kind::kZ2EulerTwo: return std::string("Z2EulerTwo(") + (c.spin ? "spin" : "non-spin") + ")";
    case HomeoClass::Kind::kUnsupported: return "Unsupported";
  }
  return "Unsupported";
}

nlohmann::json to_json(const HomeoClass& c) { return {{"class", to_string(c)}, {"axiom", c.axiom}}; }

HomeoClass homeo_classify(const ManifoldProfile& p) {
  validate(p);
  HomeoClass c;
  const BettiSplit split = betti_split(p);
  switch (p.pi1.kind) {
    case Pi1::Kind::kUnknown:
      throw InputError("homeo_classify: pi1 of '" + p.name + "' is unknown");
    case Pi1::Kind::kPresented:
      throw InputError("homeo_classify: pi1 of '" + p.name + "' has an unevaluated certificate");
    case Pi1::Kind::kTrivial: {
      c.b2plus = split.b2plus;
      c.b2minus = split.b2minus;
      c.b2 = p.b2();
      bool even = false;
      if (p.spin != Tri::kUnknown) {
        even = p.spin == Tri::kYes;
        c.axiom = "Freedman";
      } else if (p.sigma % 16 != 0) {
        even = false;
        c.axiom = "Freedman; Rokhlin";
      } else if (p.b2() == 0) {
        even = true;
        c.axiom = "Freedman";
      } else if (p.is_definite()) {
        even = false;
        c.axiom = "Freedman; Donaldson";
      } else {
        c.kind = HomeoClass::Kind::kUnsupported;
        c.axiom = "parity undetermined";
        return c;
      }
      c.kind = even ? HomeoClass::Kind::kSimplyConnectedEven : HomeoClass::Kind::kSimplyConnectedOdd;
      return c;
    }
    case Pi1::Kind::kZ2:
      if (p.is_definite()) {
        c.kind = HomeoClass::Kind::kZ2Definite;
        c.b2 = p.b2();
        c.orientation = p.sigma > 0 ? 1 : -1;
        c.axiom = "Hambleton-Kreck (definite, pi1 = Z2)";
        return c;
      }
      if (p.b2() == 0 && p.chi == 2 && p.spin != Tri::kUnknown) {
        c.kind = HomeoClass::Kind::kZ2EulerTwo;
        c.spin = p.spin == Tri::kYes;
        c.axiom = "Hambleton-Kreck (rational homology spheres, pi1 = Z2)";
        return c;
      }
      c.axiom = "no classification available";
      return c;
  }
  return c;
}

bool homeo_equivalent(const ManifoldProfile& a, const ManifoldProfile& b) {
  const HomeoClass ca = homeo_classify(a);
  const HomeoClass cb = homeo_classify(b);
  if (ca.kind == HomeoClass::Kind::kUnsupported || cb.kind == HomeoClass::Kind::kUnsupported) {
    throw UnsupportedError("homeo_equivalent: '" + (ca.kind == HomeoClass::Kind::kUnsupported ? a.name : b.name) +
                           "' is outside the supported classification");
  }
  return ca == cb;
}

}  // namespace fourcalc::manifold
