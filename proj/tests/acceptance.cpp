#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fourcalc/constructions/blocks.hpp"
#include "fourcalc/constructions/builds.hpp"
#include "fourcalc/constructions/presentations.hpp"
#include "fourcalc/fpgroup/abelianization.hpp"
#include "fourcalc/fpgroup/coset_enumeration.hpp"
#include "fourcalc/fpgroup/triviality.hpp"
#include "fourcalc/lattice/smith.hpp"
#include "fourcalc/manifold/homeo.hpp"
#include "fourcalc/sw/adjunction.hpp"
#include "fourcalc/sw/invariants.hpp"
#include "fourcalc/sw/surgery.hpp"
#include "oracles.hpp"

using namespace fourcalc;
using Clock = std::chrono::steady_clock;

namespace {

// Collects the first failure of a criterion.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

const constructions::BuildOptions kBuild{};

void pi1_certificates(Probe& p, std::string& detail) {
  fpgroup::TrivialityConfig cfg;
  cfg.enumeration.bounds.max_cosets = 1'000'000;
  double slowest = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const bool yn : {false, true}) {
      const auto t = Clock::now();
      const auto r = fpgroup::is_trivial(yn ? constructions::yn_certificate(n) : constructions::xn_certificate(n), cfg);
      const double s = seconds_since(t);
      slowest = std::max(slowest, s);
      p.expect(r.verdict == fpgroup::Verdict::kTrivial, std::string(yn ? "Y" : "X") + "_" + std::to_string(n) + " not Trivial");
      p.expect(s < 10.0, "certificate over 10 s");
    }
  }
  std::ostringstream os;
  os << "10 certificates Trivial, slowest " << slowest * 1000 << " ms";
  detail = os.str();
}

void abelianization(Probe& p, std::string& detail) {
  for (int n = 1; n <= 5; ++n) {
    const auto pres = constructions::v0_presentation(n);
    const auto a = fpgroup::abelianization(pres);
    const auto [free_rank, factors] = oracle::abelian_invariants_by_minors(fpgroup::exponent_matrix(pres));
    p.expect(a.free_rank == 2 && a.torsion_factors.empty(), "v0 H1 not Z^2 at n=" + std::to_string(n));
    p.expect(free_rank == 2 && factors.empty(), "minor oracle disagrees at n=" + std::to_string(n));
  }
  detail = "H1(v0) = Z^2 for n = 1..5, matched by determinantal divisors";
}

void basic_classes(Probe& p, std::string& detail) {
  std::ostringstream os;
  for (const auto& id : constructions::block_ids()) {
    const auto t = Clock::now();
    const auto b = constructions::build_block(id);
    const auto& l = *b.lattice;
    const auto found = sw::enumerate_basic_candidates(b.adjunction_config(), l);
    p.expect(seconds_since(t) < 5.0, id + " over 5 s");
    const bool basic = id == "U" || id == "R";
    p.expect(found.size() == (basic ? 2U : 0U), id + " has " + std::to_string(found.size()) + " candidates");
    for (const auto& k : found) {
      const auto at = [&](std::string_view label) { return lattice::pairing(l, k, l.basis_vector(label)); };
      const auto s = at("x");
      p.expect(std::abs(s) == 2 && at("y") == s, id + ": K.x, K.y not +-2");
      const std::int64_t y_weight = id == "U" ? 1 : 2;
      for (std::size_t i = 1; l.index_of("q" + std::to_string(i)); ++i)
        p.expect(y_weight * at("y") - at("q" + std::to_string(i)) == s / 2, id + ": e_i evaluation not +-1");
      const auto k2 = lattice::square(l, k);
      p.expect(k2 == (id == "U" ? 4 : 6), id + ": wrong K^2");
      p.expect(sw::formal_dimension(k2, b.profile.chi, b.profile.sigma) == 0, id + ": d != 0");
    }
    os << id << ":" << found.size() << " ";
  }
  detail = os.str() + "candidates";
}

void sw_chains(Probe& p, std::string& detail) {
  const auto all = [](const sw::SurgerySpec&) { return true; };
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto specs = constructions::surgery_chain_specs(static_cast<int>(n));
    const std::vector<std::int64_t> want{1, 1, n, n, n * n};
    p.expect(sw::surgery_chain_trace(1, specs, all) == want, "chain trace wrong at n=" + std::to_string(n));
    for (const bool yn : {false, true}) {
      const auto c = yn ? constructions::build_Yn(static_cast<int>(n), kBuild)
                        : constructions::build_Xn(static_cast<int>(n), kBuild);
      p.expect(c.chain_trace == want, "build trace wrong");
      p.expect(c.sw && c.sw->support_size() == 2, "support not a pair");
      if (c.sw)
        for (const auto& [k, v] : c.sw->values()) p.expect(std::abs(v) == n * n, "|SW| != n^2");
    }
  }
  detail = "1, 1, n, n, n^2 for X_n and Y_n, n = 1..10";
}

void profiles(Probe& p, std::string& detail) {
  for (int n = 1; n <= 10; ++n) {
    const auto x = constructions::build_Xn(n, kBuild).profile;
    const auto y = constructions::build_Yn(n, kBuild).profile;
    const auto xq = constructions::build_Xn_quotient(n, kBuild).profile;
    const auto yq = constructions::build_Yn_quotient(n, kBuild).profile;
    p.expect(x.chi == 8 && x.sigma == -4 && manifold::betti_split(x) == manifold::BettiSplit{1, 5}, "X_n profile");
    p.expect(y.chi == 6 && y.sigma == -2 && manifold::betti_split(y) == manifold::BettiSplit{1, 3}, "Y_n profile");
    p.expect(xq.chi == 4 && xq.sigma == -2, "X'_n profile");
    p.expect(yq.chi == 3 && yq.sigma == -1, "Y'_n profile");
  }
  detail = "X (8,-4) split (1,5); Y (6,-2) split (1,3); quotients (4,-2), (3,-1)";
}

void homeo_classes(Probe& p, std::string& detail) {
  using manifold::homeo_equivalent;
  using manifold::named_profile;
  for (int n = 1; n <= 5; ++n) {
    p.expect(homeo_equivalent(constructions::build_Xn(n, kBuild).profile, named_profile("CP2#5CP2bar")),
             "X_n not CP2#5CP2bar");
    p.expect(homeo_equivalent(constructions::build_Xn_quotient(n, kBuild).profile, named_profile("Z1#2CP2bar")),
             "X'_n not Z1#2CP2bar");
    p.expect(homeo_equivalent(constructions::build_Yn_quotient(n, kBuild).profile, named_profile("Z1#CP2bar")),
             "Y'_n not Z1#CP2bar");
    for (int m = 1; m <= 5; ++m) {
      p.expect(homeo_equivalent(constructions::build_Xn_quotient(n, kBuild).profile,
                                constructions::build_Xn_quotient(m, kBuild).profile),
               "X'_n, X'_m differ");
      const bool same = sw::sw_fingerprint(*constructions::build_Xn(n, kBuild).sw) ==
                        sw::sw_fingerprint(*constructions::build_Xn(m, kBuild).sw);
      p.expect(same == (n == m), "fingerprint equality wrong");
    }
  }
  detail = "classes match for n = 1..5; fingerprints distinct iff n != m";
}

void irreducibility(Probe& p, std::string& detail) {
  for (int n = 1; n <= 10; ++n) {
    for (const bool yn : {false, true}) {
      const auto c = yn ? constructions::build_Yn(n, kBuild) : constructions::build_Xn(n, kBuild);
      p.expect(sw::check_irreducible(*c.sw), "not irreducible");
      const std::set<std::int64_t> allowed = yn ? std::set<std::int64_t>{0, 24} : std::set<std::int64_t>{0, 16};
      for (const auto& [a, va] : c.sw->values())
        for (const auto& [b, vb] : c.sw->values())
          p.expect(allowed.count(lattice::square(c.sw->lattice(), a - b)) == 1, "difference square outside set");
    }
  }
  detail = "differences square to {0,16} (X) and {0,24} (Y)";
}

void chamber_containment(Probe& p, std::string& detail) {
  for (int b2 = 1; b2 <= 4; ++b2) {
    for (int n = 1; n <= 5; ++n) {
      const std::int64_t m = std::int64_t{n} * n;
      const std::set<std::int64_t> allowed{0, 1, -1, m, -m, m + 1, m - 1, -m + 1, -m - 1};
      const auto u = constructions::an_cover_chamber_union(n, b2);
      for (const auto v : u) p.expect(allowed.count(v) == 1, "value outside allowed set");
      p.expect(u.count(m) == 1 && u.count(-m) == 1, "+-n^2 missing");
      const auto a = constructions::build_An(n, b2, kBuild);
      p.expect(a.sw && sw::chamber_value_union(*a.sw) == u, "materialized union differs");
    }
  }
  detail = "b2 = 1..4, n = 1..5";
}

void property_suites(Probe& p, std::string& detail) {
  std::mt19937_64 rng(2024);
  int cases = 0;
  for (const auto& c : oracle::group_corpus()) {
    const auto pres = fpgroup::parse_presentation(c.presentation);
    const auto order = static_cast<std::int64_t>(oracle::permutation_group_order(c.faithful));
    for (const auto s : {fpgroup::Strategy::kHlt, fpgroup::Strategy::kFelsch}) {
      fpgroup::EnumerationConfig cfg;
      cfg.strategy = s;
      const auto out = fpgroup::coset_enumerate(pres, {}, cfg);
      p.expect(out.index == order, "corpus order mismatch for " + c.name);
    }
  }
  std::uniform_int_distribution<std::int64_t> d(-6, 6);
  for (int i = 0; i < 1000; ++i, ++cases) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    lattice::IntMatrix m(r, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b) m(a, b) = d(rng);
    const auto base = lattice::smith_normal_form(m).invariants;
    const auto moved = lattice::smith_normal_form(oracle::random_unimodular(r, rng) * m * oracle::random_unimodular(c, rng));
    p.expect(moved.invariants == base, "SNF not unimodular invariant");
  }
  std::uniform_int_distribution<std::int64_t> big(-10000, 10000);
  for (int i = 0; i < 1000; ++i, ++cases) {
    const auto a = big(rng), b = big(rng), x = big(rng), y = big(rng);
    std::int64_t pp = big(rng), q = big(rng);
    const std::int64_t g = std::gcd(pp, q);
    pp = g == 0 ? 1 : pp / g;
    q = g == 0 ? 0 : q / g;
    p.expect(sw::torus_surgery_sw(a + x, b + y, pp, q) == sw::torus_surgery_sw(a, b, pp, q) + sw::torus_surgery_sw(x, y, pp, q),
             "surgery not linear");
  }
  for (int i = 0; i < 1000; ++i, ++cases) {
    const std::size_t neg = rng() % 4;
    lattice::IntLattice l = lattice::hyperbolic_lattice();
    if (neg > 0) l = lattice::direct_sum(l, lattice::diagonal_lattice("m", std::vector<std::int64_t>(neg, -1)));
    sw::AdjunctionConfig cfg;
    cfg.chi = 2 + static_cast<std::int64_t>(l.rank());
    cfg.sigma = -static_cast<std::int64_t>(neg);
    cfg.eval_bound = 1 + static_cast<std::int64_t>(rng() % 3);
    auto cls = lattice::LatticeVector::zero(l.rank());
    cls[0] = 1;
    cfg.surfaces.push_back(lattice::make_surface(l, "x", cls, 1 + static_cast<std::int64_t>(rng() % 3)));
    const auto found = sw::enumerate_basic_candidates(cfg, l);
    for (const auto& k : found) p.expect(std::binary_search(found.begin(), found.end(), -k), "not negation closed");
  }
  for (int i = 0; i < 1000; ++i, ++cases) {
    const std::size_t neg = 1 + rng() % 5;
    std::vector<std::int64_t> diag{1};
    diag.insert(diag.end(), neg, -1);
    auto l = std::make_shared<const lattice::IntLattice>(lattice::diagonal_lattice("D", diag));
    auto k = lattice::LatticeVector::zero(neg + 1);
    for (auto& v : k.coords) v = 2 * static_cast<std::int64_t>(rng() % 3) - 1;
    const sw::SWState s(l, 1, {{k, 3}, {-k, -3}});
    const std::int64_t chi = static_cast<std::int64_t>(neg) + 3, sigma = 1 - static_cast<std::int64_t>(neg);
    const auto d0 = sw::formal_dimension(lattice::square(*l, k), chi, sigma);
    const std::int64_t count = 1 + static_cast<std::int64_t>(rng() % 3);
    const auto b = sw::blowup_sw(s, count);
    for (const auto& [kk, v] : b.values())
      p.expect(sw::formal_dimension(lattice::square(b.lattice(), kk), chi + count, sigma - count) == d0,
               "blowup changed formal dimension");
  }
  detail = "group corpus plus " + std::to_string(cases) + " randomized cases";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Probe&, std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "pi1 certificates", pi1_certificates},
      {2, "abelianization", abelianization},
      {3, "basic-class enumeration", basic_classes},
      {4, "surgery chains", sw_chains},
      {5, "profile arithmetic", profiles},
      {6, "homeomorphism classes", homeo_classes},
      {7, "irreducibility", irreducibility},
      {8, "chamber containment", chamber_containment},
      {9, "property suites", property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Probe probe;
    std::string detail;
    const auto t = Clock::now();
    try {
      c.run(probe, detail);
    } catch (const std::exception& e) {
      probe.expect(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t);
    if (!probe.ok()) ++failures;
    std::printf("criterion %d %-26s %s  (%.2f s) %s\n", c.id, c.name, probe.ok() ? "PASS" : "FAIL", s,
                probe.ok() ? detail.c_str() : probe.failure().c_str());
  }
  return failures == 0 ? 0 : 1;
}
