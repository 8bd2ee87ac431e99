#pragma once

#include <cstdint>
#include <string>

#include "fourcalc/manifold/profile.hpp"

namespace fourcalc::manifold {

struct HomeoClass {
  enum class Kind { kSimplyConnectedOdd, kSimplyConnectedEven, kZ2Definite, kZ2EulerTwo, kUnsupported };
  Kind kind = Kind::kUnsupported;
  std::int64_t b2plus = 0;
  std::int64_t b2minus = 0;
  std::int64_t b2 = 0;
  int orientation = 0;  // sign of sigma for definite classes
  bool spin = false;
  std::string axiom;  // classification result the class rests on

  friend bool operator==(const HomeoClass& a, const HomeoClass& b) {
    return a.kind == b.kind && a.b2plus == b.b2plus && a.b2minus == b.b2minus && a.b2 == b.b2 &&
           a.orientation == b.orientation && a.spin == b.spin;
  }
};

std::string to_string(const HomeoClass& c);
nlohmann::json to_json(const HomeoClass& c);

// Throws InputError for unknown or uncertified pi1.
HomeoClass homeo_classify(const ManifoldProfile& p);

// Throws UnsupportedError when either side is unsupported.
bool homeo_equivalent(const ManifoldProfile& a, const ManifoldProfile& b);

}  // namespace fourcalc::manifold
