#include "fourcalc/constructions/builds.hpp"

#include <cctype>

#include "fourcalc/constructions/presentations.hpp"
#include "fourcalc/errors.hpp"

namespace fourcalc::constructions {

void require_n(int n) {
  if (n < 1 || n > kMaxN) {
    throw InputError("n must be in 1.." + std::to_string(kMaxN) + ", got " + std::to_string(n));
  }
}

void require_b2(int b2) {
  if (b2 < 1 || b2 > kMaxB2) {
    throw InputError("b2 must be in 1.." + std::to_string(kMaxB2) + ", got " + std::to_string(b2));
  }
}

std::vector<sw::SurgerySpec> surgery_chain_specs(int n) {
  std::vector<sw::SurgerySpec> out;
  for (int i = 1; i <= 4; ++i) {
    const std::string d = "d" + std::to_string(i), big = "D" + std::to_string(i);
    const std::int64_t p = i % 2 == 1 ? 1 : n;
    out.push_back({d, p, -1, p == 1, std::make_pair(d, big)});
  }
  return out;
}

sw::SWState base_state(const Block& b) {
  const auto candidates = sw::enumerate_basic_candidates(b.adjunction_config(), *b.lattice);
  const auto x = b.lattice->basis_vector("x");
  std::map<lattice::LatticeVector, std::int64_t> values;
  for (const auto& k : candidates) values[k] = lattice::pairing(*b.lattice, k, x) > 0 ? 1 : -1;
  return sw::SWState(b.lattice, manifold::betti_split(b.profile).b2plus, std::move(values));
}

namespace {

Construction build_from_block(const std::string& block_id, const std::string& name, int n,
                              fpgroup::Presentation certificate, const std::string& certificate_ref,
                              const std::string& vanishing_axiom, const BuildOptions& options) {
  require_n(n);
  const Block block = build_block(block_id);
  Construction c;
  c.axioms = block.axioms;
  const auto chain = surgery_chain_specs(n);
  const auto vanishing = [](const sw::SurgerySpec& s) { return s.q != 0; };
  c.chain_trace = sw::surgery_chain_trace(1, chain, vanishing);

  manifold::ManifoldProfile p = block.profile;
  for (const auto& spec : chain) p = manifold::torus_surgery_profile(p, spec);
  p.name = name;
  const sw::SWState base = base_state(block);
  auto state = std::make_shared<const sw::SWState>(sw::apply_surgery_chain(base, chain, vanishing, name));
  // Non-spin: the intersection form is odd.
  const auto form = lattice::signature_and_parity(state->lattice());
  if (form.signature != p.sigma) throw std::logic_error("surgered lattice signature disagrees with the profile");
  p.spin = form.parity == lattice::Parity::kOdd ? manifold::Tri::kNo : manifold::Tri::kUnknown;
  p.flags = {std::string(manifold::kInvolutionFlag)};
  p.pi1 = manifold::Pi1::presented(certificate_ref);
  if (options.certify_pi1) {
    const auto verdict = fpgroup::is_trivial(certificate, options.triviality);
    if (verdict.verdict == fpgroup::Verdict::kTrivial) {
      p.pi1 = manifold::Pi1::trivial();
      p.cover_spin = p.spin;
    }
  }
  p.sw = state;
  c.profile = manifold::validate(p);
  c.sw = std::move(state);
  c.certificate = std::move(certificate);
  c.axioms.push_back({vanishing_axiom, "F(0,1) = 0 for every surgery in the chain", {{"F01", 0}}});
  c.axioms.push_back({"free-involution", "the construction with parameters (-1,-n,-1,-n) carries a free "
                      "orientation-preserving involution", {{"order", 2}}});
  return c;
}

Construction quotient_of(Construction cover, const std::string& name) {
  Construction c = std::move(cover);
  if (c.profile.pi1.kind != manifold::Pi1::Kind::kTrivial) {
    throw InputError("quotient of '" + c.profile.name + "' needs a certified simply connected cover");
  }
  manifold::ManifoldProfile q = manifold::free_quotient(c.profile, 2, name, manifold::Tri::kUnknown);
  // definite with pi1 = Z2 and b2 > 0 forces non-spin
  if (q.is_definite()) q.spin = manifold::Tri::kNo;
  q.sw = c.profile.sw;  // SW data lives on the cover
  c.profile = manifold::validate(q);
  c.axioms.push_back({"cover-multiplicativity", "chi and sigma multiply by the order of a free cover", {{"order", 2}}});
  return c;
}

}  // namespace

Construction build_Xn(int n, const BuildOptions& options) {
  require_n(n);
  return build_from_block("U", "X_" + std::to_string(n), n, xn_certificate(n), "xn(" + std::to_string(n) + ")",
                          "vanishing-P", options);
}

Construction build_Yn(int n, const BuildOptions& options) {
  require_n(n);
  Construction c = build_from_block("R", "Y_" + std::to_string(n), n, yn_certificate(n),
                                    "yn(" + std::to_string(n) + ")", "vanishing-Q", options);
  c.axioms.push_back({"normal-generation", "pi1 is normally generated by the images of s1, t1, s2, t2 and the "
                      "meridian; the certificate checks the resulting quotient", {}});
  return c;
}

Construction build_Xn_quotient(int n, const BuildOptions& options) {
  return quotient_of(build_Xn(n, options), "X'_" + std::to_string(n));
}

Construction build_Yn_quotient(int n, const BuildOptions& options) {
  return quotient_of(build_Yn(n, options), "Y'_" + std::to_string(n));
}

Construction build_An(int n, int b2, const BuildOptions& options) {
  require_b2(b2);
  Construction cover = build_Yn(n, options);
  auto cover_state = cover.sw;
  Construction c = quotient_of(std::move(cover), "Y'_" + std::to_string(n));
  const auto cp2bar = manifold::named_profile("CP2bar");
  const std::string name = "A_" + std::to_string(n) + "_b" + std::to_string(b2);
  c.profile = manifold::connected_sum_power(c.profile, cp2bar, b2 - 1, name);
  c.profile.spin = manifold::Tri::kNo;
  c.sw.reset();
  if (b2 == 1) {
    c.sw = cover_state;
  } else if ((cover_state->support_size() << (2 * b2 - 2)) <= sw::kMaxBlowupClasses) {
    c.sw = std::make_shared<const sw::SWState>(sw::blowup_sw(*cover_state, 2 * b2 - 2));
  }
  c.profile.sw = c.sw;
  c.axioms.push_back({"blowup-formula", "blowing up copies each value onto K +- E", {}});
  c.axioms.push_back({"chamber-spread", "with b2+ = 1 each chamber value lies within 1 of the computed value", {}});
  return c;
}

std::set<std::int64_t> an_cover_chamber_union(int n, int b2) {
  require_b2(b2);
  BuildOptions options;
  options.certify_pi1 = false;
  const Construction y = build_Yn(n, options);
  if (b2 == 1) return sw::chamber_value_union(*y.sw);
  const std::int64_t count = 2 * b2 - 2;
  if ((y.sw->support_size() << count) <= sw::kMaxBlowupClasses) {
    return sw::chamber_value_union(sw::blowup_sw(*y.sw, count));
  }
  return sw::chamber_value_union_after_blowup(*y.sw, count);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 6) throw InputError("bad number in '" + std::string(whole) + "'");
  int v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw InputError("bad number in '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

std::optional<manifold::ManifoldProfile> constructed_profile(std::string_view name, const BuildOptions& options) {
  auto tail = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (name.substr(0, prefix.size()) == prefix) return name.substr(prefix.size());
    return std::nullopt;
  };
  if (auto t = tail("X'_")) return build_Xn_quotient(parse_int(*t, name), options).profile;
  if (auto t = tail("Y'_")) return build_Yn_quotient(parse_int(*t, name), options).profile;
  if (auto t = tail("X_")) return build_Xn(parse_int(*t, name), options).profile;
  if (auto t = tail("Y_")) return build_Yn(parse_int(*t, name), options).profile;
  if (auto t = tail("A_")) {
    const auto split = t->find("_b");
    if (split == std::string_view::npos) throw InputError("expected A_<n>_b<b2>, got '" + std::string(name) + "'");
    return build_An(parse_int(t->substr(0, split), name), parse_int(t->substr(split + 2), name), options).profile;
  }
  for (const auto& id : block_ids())
    if (name == id) return build_block(id).profile;
  return std::nullopt;
}

}  // namespace

manifold::ManifoldProfile lookup_profile(std::string_view name, const BuildOptions& options) {
  const auto hash = name.find('#');
  const std::string_view head = name.substr(0, hash);
  auto first = constructed_profile(head, options);
  if (!first) return manifold::named_profile(name);
  if (hash == std::string_view::npos) return *first;
  // Remaining summands are atomic; graft them onto the constructed one.
  manifold::ManifoldProfile rest = manifold::named_profile("S4#" + std::string(name.substr(hash + 1)));
  return manifold::connected_sum(*first, rest, std::string(name));
}

}  // namespace fourcalc::constructions
