#include "fourcalc/manifold/profile.hpp"

#include <cctype>
#include <cstdlib>

#include "fourcalc/errors.hpp"

namespace fourcalc::manifold {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::kYes: return "yes";
    case Tri::kNo: return "no";
    case Tri::kUnknown: return "unknown";
  }
  return "unknown";
}

Tri parse_tri(std::string_view s) {
  if (s == "yes") return Tri::kYes;
  if (s == "no") return Tri::kNo;
  if (s == "unknown") return Tri::kUnknown;
  throw InputError("expected yes|no|unknown, got '" + std::string(s) + "'");
}

std::string to_string(const Pi1& p) {
  switch (p.kind) {
    case Pi1::Kind::kTrivial: return "trivial";
    case Pi1::Kind::kZ2: return "z2";
    case Pi1::Kind::kPresented: return "presented:" + p.ref;
    case Pi1::Kind::kUnknown: return "unknown";
  }
  return "unknown";
}

Pi1 parse_pi1(std::string_view s) {
  if (s == "trivial") return Pi1::trivial();
  if (s == "z2") return Pi1::z2();
  if (s == "unknown") return Pi1::unknown();
  constexpr std::string_view prefix = "presented:";
  if (s.substr(0, prefix.size()) == prefix && s.size() > prefix.size()) {
    return Pi1::presented(std::string(s.substr(prefix.size())));
  }
  throw InputError("unrecognized pi1 descriptor '" + std::string(s) + "'");
}

std::string surface_flag(std::int64_t genus) { return "surface-g" + std::to_string(genus); }

const ManifoldProfile& validate(const ManifoldProfile& p) {
  const std::string who = "profile '" + p.name + "': ";
  if (p.b1 < 0) throw InputError(who + "b1 must be non-negative");
  const std::int64_t b2 = p.b2();
  if (b2 < 0) throw InputError(who + "b2 = chi - 2 + 2 b1 is negative");
  if ((b2 + p.sigma) % 2 != 0) throw InputError(who + "b2 + sigma must be even");
  if (std::llabs(p.sigma) > b2) throw InputError(who + "|sigma| exceeds b2");
  if (p.spin == Tri::kYes && p.sigma % 16 != 0) throw InputError(who + "spin requires sigma = 0 mod 16");
  if (p.pi1.kind == Pi1::Kind::kZ2 && p.is_definite() && p.spin == Tri::kYes) {
    throw InputError(who + "a definite manifold with pi1 = Z2 and b2 > 0 is not spin");
  }
  if (p.definite_diagonal && !p.is_definite()) throw InputError(who + "diagonal flag on an indefinite form");
  return p;
}

BettiSplit betti_split(const ManifoldProfile& p) {
  validate(p);
  return {(p.b2() + p.sigma) / 2, (p.b2() - p.sigma) / 2};
}

namespace {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::kNo || b == Tri::kNo) return Tri::kNo;
  if (a == Tri::kYes && b == Tri::kYes) return Tri::kYes;
  return Tri::kUnknown;
}

std::optional<bool> sum_diagonal(const ManifoldProfile& a, const ManifoldProfile& b, const ManifoldProfile& out) {
  if (!out.is_definite()) return std::nullopt;
  const bool a_ok = a.b2() == 0 || a.definite_diagonal.value_or(false);
  const bool b_ok = b.b2() == 0 || b.definite_diagonal.value_or(false);
  if (a_ok && b_ok) return true;
  return std::nullopt;
}

}  // namespace

ManifoldProfile connected_sum(const ManifoldProfile& a, const ManifoldProfile& b, std::string name) {
  validate(a);
  validate(b);
  const bool a_simple = a.pi1.kind == Pi1::Kind::kTrivial;
  const bool b_simple = b.pi1.kind == Pi1::Kind::kTrivial;
  if (!a_simple && !b_simple) {
    throw UnsupportedError("connected_sum: both summands have nontrivial or unknown pi1");
  }
  ManifoldProfile out;
  out.name = name.empty() ? a.name + "#" + b.name : std::move(name);
  out.chi = a.chi + b.chi - 2;
  out.sigma = a.sigma + b.sigma;
  out.b1 = a.b1 + b.b1;
  out.pi1 = a_simple ? b.pi1 : a.pi1;
  out.spin = tri_and(a.spin, b.spin);
  // The universal cover of M # N (N simply connected) is M~ # |pi1| N.
  if (a_simple && b_simple) {
    out.cover_spin = out.spin;
  } else {
    const ManifoldProfile& twisted = a_simple ? b : a;
    const ManifoldProfile& plain = a_simple ? a : b;
    out.cover_spin = tri_and(twisted.cover_spin, plain.spin);
  }
  out.definite_diagonal = sum_diagonal(a, b, out);
  return validate(out), out;
}

ManifoldProfile connected_sum_power(const ManifoldProfile& a, const ManifoldProfile& b, std::int64_t k,
                                    std::string name) {
  if (k < 0) throw InputError("connected_sum_power: negative multiplicity");
  ManifoldProfile out = a;
  for (std::int64_t i = 0; i < k; ++i) out = connected_sum(out, b);
  if (k == 0) validate(out);
  out.name = name.empty() ? (k == 0 ? a.name : a.name + "#" + (k == 1 ? "" : std::to_string(k)) + b.name)
                          : std::move(name);
  return out;
}

ManifoldProfile fiber_sum(const ManifoldProfile& a, const ManifoldProfile& b, std::int64_t genus, std::string name,
                          std::optional<std::int64_t> b1) {
  if (genus < 1) throw InputError("fiber_sum: genus must be positive");
  validate(a);
  validate(b);
  const std::string flag = surface_flag(genus);
  if (!a.has_flag(flag) || !b.has_flag(flag)) {
    throw InputError("fiber_sum: both sides need a square-0 genus-" + std::to_string(genus) + " surface");
  }
  ManifoldProfile out;
  out.name = name.empty() ? a.name + "#_f" + b.name : std::move(name);
  out.chi = a.chi + b.chi + 4 * (genus - 1);
  out.sigma = a.sigma + b.sigma;
  out.b1 = b1.value_or(a.b1 + b.b1 - 2 * genus);
  out.pi1 = Pi1::unknown();
  return validate(out), out;
}

ManifoldProfile torus_surgery_profile(const ManifoldProfile& p, const sw::SurgerySpec& spec, std::string name) {
  sw::require_coprime(spec.p, spec.q);
  validate(p);
  if (spec.q == 0) {
    return p;  // (+-1, 0): no surgery
  }
  ManifoldProfile out = p;
  if (!name.empty()) out.name = std::move(name);
  if (spec.kills_pair) {
    if (out.b1 == 0) throw InputError("torus_surgery_profile: no first Betti number left to kill");
    --out.b1;
  }
  out.pi1 = Pi1::unknown();
  out.spin = Tri::kUnknown;
  out.cover_spin = Tri::kUnknown;
  out.definite_diagonal.reset();
  out.sw.reset();
  return validate(out), out;
}

ManifoldProfile free_quotient(const ManifoldProfile& p, std::int64_t order, std::string name, Tri spin) {
  validate(p);
  if (order < 2) throw InputError("free_quotient: order must be at least 2");
  if (p.pi1.kind != Pi1::Kind::kTrivial) throw InputError("free_quotient: cover must be simply connected");
  if (!p.has_flag(kInvolutionFlag)) throw InputError("free_quotient: profile '" + p.name + "' has no free involution");
  if (p.chi % order != 0 || p.sigma % order != 0) {
    throw InputError("free_quotient: chi and sigma must be divisible by " + std::to_string(order));
  }
  ManifoldProfile out;
  out.name = name.empty() ? p.name + "/Z" + std::to_string(order) : std::move(name);
  out.chi = p.chi / order;
  out.sigma = p.sigma / order;
  out.b1 = 0;
  out.pi1 = order == 2 ? Pi1::z2() : Pi1::unknown();
  out.spin = spin;
  out.cover_spin = p.spin;
  return validate(out), out;
}

namespace {

ManifoldProfile atomic(std::string name, std::int64_t chi, std::int64_t sigma, std::int64_t b1, Pi1 pi1, Tri spin,
                       Tri cover_spin, std::set<std::string> flags = {}) {
  ManifoldProfile p;
  p.name = std::move(name);
  p.chi = chi;
  p.sigma = sigma;
  p.b1 = b1;
  p.pi1 = std::move(pi1);
  p.spin = spin;
  p.cover_spin = cover_spin;
  p.flags = std::move(flags);
  if (p.is_definite()) p.definite_diagonal = true;
  return validate(p), p;
}

ManifoldProfile atomic_profile(std::string_view name) {
  if (name == "CP2") return atomic("CP2", 3, 1, 0, Pi1::trivial(), Tri::kNo, Tri::kNo);
  if (name == "CP2bar") return atomic("CP2bar", 3, -1, 0, Pi1::trivial(), Tri::kNo, Tri::kNo);
  if (name == "S2xS2") {
    return atomic("S2xS2", 4, 0, 0, Pi1::trivial(), Tri::kYes, Tri::kYes, {std::string(kInvolutionFlag)});
  }
  if (name == "S4") return atomic("S4", 2, 0, 0, Pi1::trivial(), Tri::kYes, Tri::kYes);
  if (name == "T4") return atomic("T4", 0, 0, 4, Pi1::unknown(), Tri::kYes, Tri::kYes, {surface_flag(1)});
  if (name == "Z0") return atomic("Z0", 2, 0, 0, Pi1::z2(), Tri::kYes, Tri::kYes);
  if (name == "Z1") return atomic("Z1", 2, 0, 0, Pi1::z2(), Tri::kNo, Tri::kYes);
  throw InputError("unknown manifold '" + std::string(name) + "'");
}

}  // namespace

ManifoldProfile named_profile(std::string_view name) {
  std::size_t start = 0;
  std::optional<ManifoldProfile> out;
  while (start <= name.size()) {
    const std::size_t end = std::min(name.find('#', start), name.size());
    std::string_view part = name.substr(start, end - start);
    std::int64_t count = 1;
    std::size_t digits = 0;
    while (digits < part.size() && std::isdigit(static_cast<unsigned char>(part[digits]))) ++digits;
    if (digits > 0) {
      if (!out) throw InputError("multiplicity on the first summand of '" + std::string(name) + "'");
      count = std::stoll(std::string(part.substr(0, digits)));
      part.remove_prefix(digits);
    }
    if (part.empty()) throw InputError("empty summand in '" + std::string(name) + "'");
    const ManifoldProfile piece = atomic_profile(part);
    out = out ? connected_sum_power(*out, piece, count) : piece;
    start = end + 1;
  }
  out->name = std::string(name);
  return *out;
}

nlohmann::json to_json(const ManifoldProfile& p) {
  std::set<std::string> flags = p.flags;
  if (p.definite_diagonal) flags.insert(*p.definite_diagonal ? "definite-diagonal" : "definite-nondiagonal");
  return {{"name", p.name},
          {"chi", p.chi},
          {"sigma", p.sigma},
          {"b1", p.b1},
          {"pi1", to_string(p.pi1)},
          {"spin", to_string(p.spin)},
          {"cover_spin", to_string(p.cover_spin)},
          {"flags", flags}};
}

ManifoldProfile profile_from_json(const nlohmann::json& j) {
  try {
    ManifoldProfile p;
    p.name = j.at("name").get<std::string>();
    p.chi = j.at("chi").get<std::int64_t>();
    p.sigma = j.at("sigma").get<std::int64_t>();
    p.b1 = j.at("b1").get<std::int64_t>();
    p.pi1 = parse_pi1(j.at("pi1").get<std::string>());
    p.spin = parse_tri(j.at("spin").get<std::string>());
    p.cover_spin = parse_tri(j.at("cover_spin").get<std::string>());
    for (const auto& f : j.at("flags")) {
      const auto flag = f.get<std::string>();
      if (flag == "definite-diagonal") {
        p.definite_diagonal = true;
      } else if (flag == "definite-nondiagonal") {
        p.definite_diagonal = false;
      } else {
        p.flags.insert(flag);
      }
    }
    return validate(p), p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed profile JSON: ") + e.what());
  }
}

}  // namespace fourcalc::manifold
