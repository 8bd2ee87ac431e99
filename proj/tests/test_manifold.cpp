#include <doctest.h>

#include <random>

#include "fourcalc/constructions/builds.hpp"
#include "fourcalc/errors.hpp"
#include "fourcalc/manifold/homeo.hpp"
#include "fourcalc/manifold/profile.hpp"

using namespace fourcalc;
using namespace fourcalc::manifold;

namespace {

ManifoldProfile simply_connected(std::int64_t chi, std::int64_t sigma, Tri spin) {
  ManifoldProfile p;
  p.name = "M";
  p.chi = chi;
  p.sigma = sigma;
  p.b1 = 0;
  p.pi1 = Pi1::trivial();
  p.spin = spin;
  p.cover_spin = spin;
  if (p.is_definite()) p.definite_diagonal = spin == Tri::kNo;
  return p;
}

ManifoldProfile with_flag(ManifoldProfile p, const std::string& flag) {
  p.flags.insert(flag);
  return p;
}

const constructions::BuildOptions kBuild{};

}  // namespace

TEST_CASE("connected sum examples") {
  const auto cp2 = named_profile("CP2");
  const auto bar = named_profile("CP2bar");
  auto s = connected_sum(cp2, bar);
  CHECK(s.chi == 4);
  CHECK(s.sigma == 0);
  const auto x = constructions::build_Xn(3, kBuild).profile;
  s = connected_sum(x, bar);
  CHECK(s.chi == 9);
  CHECK(s.sigma == -5);
  for (int b2 = 1; b2 <= 6; ++b2) {
    const auto yq = constructions::build_Yn_quotient(2, kBuild).profile;
    const auto a = connected_sum_power(yq, bar, b2 - 1);
    CHECK(a.chi == 3 + (b2 - 1));
    CHECK(a.sigma == -1 - (b2 - 1));
  }
  CHECK_THROWS_AS(connected_sum(named_profile("Z1"), named_profile("Z0")), UnsupportedError);
}

TEST_CASE("fiber sum examples") {
  const auto t2 = with_flag(named_profile("T4#2CP2bar"), surface_flag(2));
  const auto t1 = with_flag(named_profile("T4#CP2bar"), surface_flag(2));
  auto f = fiber_sum(t2, t2, 2);
  CHECK(f.chi == 8);
  CHECK(f.sigma == -4);
  f = fiber_sum(t1, t1, 2);
  CHECK(f.chi == 6);
  CHECK(f.sigma == -2);
  const auto torus = named_profile("T4");
  f = fiber_sum(torus, torus, 1);
  CHECK(f.chi == torus.chi + torus.chi);
  CHECK_THROWS_AS(fiber_sum(torus, torus, 2), InputError);
}

TEST_CASE("torus surgery profile") {
  const auto u = constructions::build_block("U").profile;
  ManifoldProfile p = u;
  for (const auto& spec : constructions::surgery_chain_specs(4)) p = torus_surgery_profile(p, spec);
  CHECK(p.chi == 8);
  CHECK(p.sigma == -4);
  CHECK(p.b1 == 0);
  const auto r = constructions::build_block("R").profile;
  p = r;
  for (const auto& spec : constructions::surgery_chain_specs(2)) p = torus_surgery_profile(p, spec);
  CHECK(p.chi == 6);
  CHECK(p.sigma == -2);
  CHECK(torus_surgery_profile(u, sw::SurgerySpec{"d1", 1, 0}) == u);
  CHECK_THROWS_AS(torus_surgery_profile(u, sw::SurgerySpec{"d1", 2, 2}), InputError);
}

TEST_CASE("free quotient examples") {
  const auto xq = constructions::build_Xn_quotient(2, kBuild).profile;
  CHECK(xq.chi == 4);
  CHECK(xq.sigma == -2);
  CHECK(xq.b2() == 2);
  const auto z = free_quotient(named_profile("S2xS2"));
  CHECK(z.chi == 2);
  CHECK(z.sigma == 0);
  CHECK(z.b2() == 0);
  const auto yq = constructions::build_Yn_quotient(2, kBuild).profile;
  CHECK(yq.chi == 3);
  CHECK(yq.sigma == -1);
  CHECK(yq.b2() == 1);
  CHECK_THROWS_AS(free_quotient(named_profile("CP2")), InputError);
}

TEST_CASE("betti split examples") {
  CHECK(betti_split(simply_connected(8, -4, Tri::kNo)) == BettiSplit{1, 5});
  CHECK(betti_split(simply_connected(6, -2, Tri::kNo)) == BettiSplit{1, 3});
  CHECK(betti_split(named_profile("S2xS2")) == BettiSplit{1, 1});
}

TEST_CASE("homeomorphism classification examples") {
  const auto x = constructions::build_Xn(3, kBuild).profile;
  CHECK(to_string(homeo_classify(x)) == "SimplyConnectedOdd(1,5)");
  CHECK(homeo_equivalent(x, named_profile("CP2#5CP2bar")));
  const auto xq = constructions::build_Xn_quotient(3, kBuild).profile;
  CHECK(homeo_classify(xq) == homeo_classify(named_profile("Z1#2CP2bar")));
  const auto yq = constructions::build_Yn_quotient(3, kBuild).profile;
  CHECK(homeo_equivalent(yq, named_profile("Z1#CP2bar")));
  CHECK(homeo_classify(named_profile("Z1#2CP2bar")) != homeo_classify(named_profile("Z1#3CP2bar")));
  CHECK_FALSE(homeo_equivalent(named_profile("Z0"), named_profile("Z1")));
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m)
      CHECK(homeo_equivalent(constructions::build_Xn_quotient(n, kBuild).profile,
                             constructions::build_Xn_quotient(m, kBuild).profile));
  CHECK(to_string(homeo_classify(named_profile("S2xS2"))) == "SimplyConnectedEven(1,1)");
  ManifoldProfile unknown = x;
  unknown.pi1 = Pi1::unknown();
  CHECK_THROWS_AS(homeo_classify(unknown), InputError);
}

TEST_CASE("profile arithmetic properties") {
  std::mt19937_64 rng(73);
  const std::vector<std::string> atoms{"CP2", "CP2bar", "S2xS2", "S4"};
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const auto a = named_profile(atoms[pick(rng)]);
    const auto b = named_profile(atoms[pick(rng)]);
    const auto c = named_profile(atoms[pick(rng)]);
    const auto ab = connected_sum(a, b);
    CHECK(ab.b2() == a.b2() + b.b2());
    CHECK(betti_split(ab).b2plus == betti_split(a).b2plus + betti_split(b).b2plus);
    const auto left = connected_sum(ab, c);
    const auto right = connected_sum(a, connected_sum(b, c));
    CHECK(left.chi == right.chi);
    CHECK(left.sigma == right.sigma);
    CHECK(homeo_equivalent(connected_sum(a, b), connected_sum(b, a)));
    CHECK(homeo_equivalent(connected_sum(a, named_profile("S4")), a));
    const auto split = betti_split(left);
    CHECK(split.b2plus - split.b2minus == left.sigma);
    CHECK(split.b2plus + split.b2minus == left.b2());
  }
}

TEST_CASE("free quotient and cover relations") {
  for (int n = 1; n <= 30; ++n) {
    for (const bool yn : {false, true}) {
      const auto cover = (yn ? constructions::build_Yn(n, kBuild) : constructions::build_Xn(n, kBuild)).profile;
      const auto quotient =
          (yn ? constructions::build_Yn_quotient(n, kBuild) : constructions::build_Xn_quotient(n, kBuild)).profile;
      CHECK(cover.chi == 2 * quotient.chi);
      CHECK(cover.sigma == 2 * quotient.sigma);
      CHECK(quotient.pi1 == Pi1::z2());
      CHECK(quotient.is_definite());
    }
  }
}

TEST_CASE("profile validation") {
  ManifoldProfile bad = simply_connected(8, -4, Tri::kNo);
  bad.sigma = -3;
  CHECK_THROWS_AS(validate(bad), InputError);
  bad = simply_connected(4, 0, Tri::kYes);
  CHECK_NOTHROW(validate(bad));
  bad = simply_connected(2, 0, Tri::kYes);
  bad.chi = 0;
  CHECK_THROWS_AS(validate(bad), InputError);
  auto spin = simply_connected(4, -2, Tri::kNo);
  spin.spin = Tri::kYes;
  spin.definite_diagonal.reset();
  CHECK_THROWS_AS(validate(spin), InputError);
}

TEST_CASE("profile json round trip") {
  std::vector<ManifoldProfile> profiles;
  for (const auto* name : {"CP2", "CP2bar", "S2xS2", "S4", "T4", "Z0", "Z1", "Z1#2CP2bar", "CP2#5CP2bar"})
    profiles.push_back(named_profile(name));
  for (int n = 1; n <= 3; ++n) {
    profiles.push_back(constructions::build_Xn(n, kBuild).profile);
    profiles.push_back(constructions::build_Yn_quotient(n, kBuild).profile);
    profiles.push_back(constructions::build_An(n, 3, kBuild).profile);
  }
  for (const auto& p : profiles) {
    CAPTURE(p.name);
    const auto back = profile_from_json(to_json(p));
    CHECK(back == p);
    CHECK(to_json(back) == to_json(p));
  }
  CHECK_THROWS_AS(profile_from_json(nlohmann::json{{"name", "x"}, {"chi", 8}, {"sigma", -3}}), InputError);
}
