#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "fourcalc/sw/state.hpp"
#include "fourcalc/sw/surgery.hpp"

namespace fourcalc::manifold {

enum class Tri { kYes, kNo, kUnknown };
std::string_view to_string(Tri t);
Tri parse_tri(std::string_view s);

struct Pi1 {
  enum class Kind { kTrivial, kZ2, kPresented, kUnknown };
  Kind kind = Kind::kUnknown;
  std::string ref;  // certificate reference for kPresented

  static Pi1 trivial() { return {Kind::kTrivial, {}}; }
  static Pi1 z2() { return {Kind::kZ2, {}}; }
  static Pi1 presented(std::string ref) { return {Kind::kPresented, std::move(ref)}; }
  static Pi1 unknown() { return {Kind::kUnknown, {}}; }

  friend bool operator==(const Pi1&, const Pi1&) = default;
};
std::string to_string(const Pi1& p);
Pi1 parse_pi1(std::string_view s);

// Closed oriented smooth 4-manifold, by its numerical invariants.
struct ManifoldProfile {
  std::string name;
  std::int64_t chi = 2;
  std::int64_t sigma = 0;
  std::int64_t b1 = 0;
  Pi1 pi1 = Pi1::unknown();
  Tri spin = Tri::kUnknown;
  Tri cover_spin = Tri::kUnknown;
  std::optional<bool> definite_diagonal;
  // e.g. "involution", "surface-g2"
  std::set<std::string> flags;
  std::shared_ptr<const sw::SWState> sw;

  std::int64_t b2() const { return chi - 2 + 2 * b1; }
  bool is_definite() const { return b2() > 0 && (b2() == sigma || b2() == -sigma); }
  bool has_flag(std::string_view f) const { return flags.count(std::string(f)) != 0; }

  friend bool operator==(const ManifoldProfile& a, const ManifoldProfile& b) {
    return a.name == b.name && a.chi == b.chi && a.sigma == b.sigma && a.b1 == b.b1 && a.pi1 == b.pi1 &&
           a.spin == b.spin && a.cover_spin == b.cover_spin && a.definite_diagonal == b.definite_diagonal &&
           a.flags == b.flags;
  }
};

std::string surface_flag(std::int64_t genus);
inline constexpr std::string_view kInvolutionFlag = "involution";

// Throws InputError when the invariants are inconsistent.
const ManifoldProfile& validate(const ManifoldProfile& p);

struct BettiSplit {
  std::int64_t b2plus = 0;
  std::int64_t b2minus = 0;
  friend bool operator==(const BettiSplit&, const BettiSplit&) = default;
};
BettiSplit betti_split(const ManifoldProfile& p);

ManifoldProfile connected_sum(const ManifoldProfile& a, const ManifoldProfile& b, std::string name = {});
// a # k b
ManifoldProfile connected_sum_power(const ManifoldProfile& a, const ManifoldProfile& b, std::int64_t k,
                                    std::string name = {});

// Both sides must carry surface_flag(genus). b1 defaults to b1(a)+b1(b)-2 genus.
ManifoldProfile fiber_sum(const ManifoldProfile& a, const ManifoldProfile& b, std::int64_t genus,
                          std::string name = {}, std::optional<std::int64_t> b1 = std::nullopt);

// (p,q) = (+-1,0) returns p unchanged. Otherwise chi, sigma kept, pi1 and
// spin become unknown and a killed pair lowers b1 by one.
ManifoldProfile torus_surgery_profile(const ManifoldProfile& p, const sw::SurgerySpec& spec, std::string name = {});

// Needs pi1 trivial and the involution flag. sigma(cover) = order * sigma.
ManifoldProfile free_quotient(const ManifoldProfile& p, std::int64_t order = 2, std::string name = {},
                              Tri spin = Tri::kUnknown);

// Atomic names: CP2, CP2bar, S2xS2, S4, T4, Z0, Z1; sums like "Z1#2CP2bar".
ManifoldProfile named_profile(std::string_view name);

// {name, chi, sigma, b1, pi1, spin, cover_spin, flags}
nlohmann::json to_json(const ManifoldProfile& p);
ManifoldProfile profile_from_json(const nlohmann::json& j);

}  // namespace fourcalc::manifold
