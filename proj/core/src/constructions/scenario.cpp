#include "fourcalc/constructions/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fourcalc/constructions/builds.hpp"
#include "fourcalc/constructions/presentations.hpp"
#include "fourcalc/errors.hpp"
#include "fourcalc/fpgroup/abelianization.hpp"
#include "fourcalc/lattice/json.hpp"
#include "fourcalc/manifold/homeo.hpp"
#include "fourcalc/sw/adjunction.hpp"

namespace fourcalc::constructions {

using nlohmann::json;

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids{"thm-main", "thm-b2=2", "thm-b2=1", "cor-irr",  "lem-U",
                                            "thm-X-SW", "thm-basicQ", "fund-Xn", "fund-Yn", "top-class"};
  return ids;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kResource: return "resource";
    case CheckStatus::kInput: return "input-error";
    case CheckStatus::kUnsupported: return "unsupported";
    case CheckStatus::kInternal: return "internal-error";
  }
  return "fail";
}

IntRange parse_range(const json& j, std::string_view what) {
  const std::string name(what);
  IntRange r;
  if (j.is_number_integer()) {
    r.lo = r.hi = j.get<int>();
  } else if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    r.lo = j[0].get<int>();
    r.hi = j[1].get<int>();
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto dots = s.find("..");
    auto to_int = [&](const std::string& t) {
      if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
          })) {
        throw InputError("invalid " + name + " '" + s + "'");
      }
      try {
        return std::stoi(t);
      } catch (const std::exception&) {
        throw InputError("invalid " + name + " '" + s + "'");
      }
    };
    if (dots == std::string::npos) {
      r.lo = r.hi = to_int(s);
    } else {
      r.lo = to_int(s.substr(0, dots));
      r.hi = to_int(s.substr(dots + 2));
    }
  } else {
    throw InputError(name + " must be an integer, \"a..b\" or [a, b]");
  }
  if (r.lo > r.hi) throw InputError(name + " range is empty");
  return r;
}

namespace {

struct Params {
  IntRange n;
  IntRange b2;
  bool uses_b2 = false;
};

Params read_params(std::string_view id, const json& params) {
  if (!params.is_object()) throw InputError("params must be an object");
  Params p;
  const bool main = id == "thm-main";
  const bool long_chain = id == "thm-X-SW" || id == "thm-basicQ";
  p.n = {1, long_chain ? 10 : 5};
  p.b2 = {1, 4};
  p.uses_b2 = main;
  for (const auto& [key, value] : params.items()) {
    if (key == "n") {
      p.n = parse_range(value, "n");
    } else if (key == "b2" && main) {
      p.b2 = parse_range(value, "b2");
    } else {
      throw InputError("scenario '" + std::string(id) + "' does not take parameter '" + key + "'");
    }
  }
  require_n(p.n.lo);
  require_n(p.n.hi);
  if (main) {
    require_b2(p.b2.lo);
    require_b2(p.b2.hi);
  }
  return p;
}

json params_json(const Params& p) {
  json out = {{"n", {p.n.lo, p.n.hi}}};
  if (p.uses_b2) out["b2"] = {p.b2.lo, p.b2.hi};
  return out;
}

std::string sq(int n) { return std::to_string(static_cast<std::int64_t>(n) * n); }
std::string str(int n) { return std::to_string(n); }

// Expected candidate data, written from the stated evaluations.
json expected_candidates(const std::string& block) {
  if (block != "U" && block != "R") return {{"count", 0}, {"classes", json::array()}};
  const bool u = block == "U";
  const int e_count = u ? 4 : 2;
  json classes = json::array();
  for (int sign : {-1, 1}) {
    json evals = json::object();
    for (int i = 1; i <= 4; ++i) {
      evals["d" + str(i)] = 0;
      evals["D" + str(i)] = 0;
    }
    evals["x"] = 2 * sign;
    evals["y"] = 2 * sign;
    for (int i = 1; i <= e_count; ++i) evals["e" + str(i)] = sign;
    classes.push_back({{"evaluations", evals}, {"square", u ? 4 : 6}, {"dimension", 0}});
  }
  return {{"count", 2}, {"classes", classes}};
}

json sw_expectation(int n, int k_squared) {
  const std::int64_t v = static_cast<std::int64_t>(n) * n;
  return {{"support", 2}, {"magnitudes", {v, v}}, {"squares", {k_squared, k_squared}}};
}

json chain_expectation(int n) { return json{1, 1, n, n, static_cast<std::int64_t>(n) * n}; }

json profile_expectation(std::int64_t chi, std::int64_t sigma, std::int64_t plus, std::int64_t minus,
                         const std::string& pi1) {
  return {{"chi", chi}, {"sigma", sigma}, {"b1", 0}, {"betti_split", {plus, minus}}, {"pi1", pi1}};
}

json n_list(const IntRange& r) {
  json out = json::array();
  for (int n = r.lo; n <= r.hi; ++n) out.push_back(n);
  return out;
}

std::vector<Check> default_checks(std::string_view id, const Params& p) {
  std::vector<Check> c;
  auto add = [&](std::string name, std::string op, json args, json expect, std::string claim) {
    c.push_back({std::move(name), std::move(op), std::move(args), std::move(expect), std::move(claim)});
  };
  if (id == "fund-Xn") {
    for (int n = p.n.lo; n <= p.n.hi; ++n) {
      add("xn-trivial-n" + str(n), "is_trivial", {{"builtin", "xn"}, {"n", n}}, "Trivial",
          "pi1(X_" + str(n) + ") is trivial");
      add("v0-h1-n" + str(n), "abelianization", {{"builtin", "v0"}, {"n", n}},
          {{"free_rank", 2}, {"torsion", json::array()}}, "H1 of the v0 group is Z^2");
    }
    add("xn-no-small-quotient-n" + str(p.n.lo), "finite_quotients", {{"builtin", "xn"}, {"n", p.n.lo}, {"max_order", 8}},
        0, "no surjection onto a group of order <= 8");
    add("xn-unglued-h1-n" + str(p.n.lo), "abelianization", {{"builtin", "xn-unglued"}, {"n", p.n.lo}},
        {{"free_rank", 4}, {"torsion", json::array()}}, "without gluing the group is nontrivial");
  } else if (id == "fund-Yn") {
    for (int n = p.n.lo; n <= p.n.hi; ++n) {
      add("yn-trivial-n" + str(n), "is_trivial", {{"builtin", "yn"}, {"n", n}}, "Trivial",
          "pi1(Y_" + str(n) + ") is trivial");
      add("yn-relative-index-n" + str(n), "coset_index",
          {{"builtin", "yn"}, {"n", n}, {"subgroup", {"s1", "s2", "mu", "t2"}}}, 1,
          "<s1, s2, mu, t2> is the whole group");
    }
  } else if (id == "lem-U") {
    add("U-candidates", "enumerate_basic_candidates", {{"block", "U"}}, expected_candidates("U"),
        "U has exactly the two basic classes +-c1");
    add("U-form", "signature_and_parity", {{"lattice", "U"}}, {{"signature", -4}, {"parity", "odd"}},
        "H2(U) has signature -4 and odd form");
    add("U-rank", "lattice_rank", {{"lattice", "U"}}, 14, "H2(U) = Z^14");
    add("U-candidates-characteristic", "is_characteristic", {{"lattice", "U"}, {"k", "candidates"}},
        json{true, true}, "candidates are characteristic");
    add("U-dimension", "formal_dimension", {{"k_squared", 4}, {"chi", 8}, {"sigma", -4}}, 0,
        "formal dimension (K^2 - 4)/4 vanishes at K^2 = 4");
    add("U-profile", "profile", {{"name", "U"}}, {{"chi", 8}, {"sigma", -4}, {"b1", 4}, {"betti_split", {5, 9}}, {"pi1", "unknown"}},
        "chi(U) = 8, sigma(U) = -4");
  } else if (id == "thm-X-SW" || id == "thm-basicQ") {
    const bool x = id == "thm-X-SW";
    const std::string block = x ? "U" : "R";
    const std::string m = x ? "X" : "Y";
    add(block + "-candidates", "enumerate_basic_candidates", {{"block", block}}, expected_candidates(block),
        block + " has exactly two basic classes");
    if (x) {
      add("vanishing-P", "enumerate_basic_candidates", {{"block", "vanishing-P"}}, expected_candidates("none"),
          "a slope-0 surgery kills every SW invariant");
    } else {
      add("vanishing-Q-odd", "enumerate_basic_candidates", {{"block", "vanishing-Q-odd"}}, expected_candidates("none"),
          "slope 0 on an odd torus kills every SW invariant");
      add("vanishing-Q-even", "enumerate_basic_candidates", {{"block", "vanishing-Q-even"}},
          expected_candidates("none"), "slope 0 on an even torus kills every SW invariant");
    }
    for (int n = p.n.lo; n <= p.n.hi; ++n) {
      add(m + "-chain-n" + str(n), "surgery_chain", {{"manifold", m}, {"n", n}}, chain_expectation(n),
          "|SW| runs 1, 1, n, n, n^2 along the surgeries");
      add(m + "-state-n" + str(n), "sw_state", {{"manifold", m}, {"n", n}}, sw_expectation(n, x ? 4 : 6),
          "SW(+-K) = +-" + sq(n) + " on " + m + "_" + str(n));
    }
  } else if (id == "thm-b2=2" || id == "thm-b2=1") {
    const bool two = id == "thm-b2=2";
    const std::string m = two ? "X" : "Y";
    const std::string model = two ? "Z1#2CP2bar" : "Z1#CP2bar";
    for (int n = p.n.lo; n <= p.n.hi; ++n) {
      add(m + "-trivial-n" + str(n), "is_trivial", {{"builtin", two ? "xn" : "yn"}, {"n", n}}, "Trivial",
          "the cover " + m + "_" + str(n) + " is simply connected");
      add(m + "'-homeo-n" + str(n), "homeo_equivalent", {{"a", m + "'_" + str(n)}, {"b", model}}, true,
          m + "'_" + str(n) + " is homeomorphic to " + model);
      add(m + "-irreducible-n" + str(n), "check_irreducible", {{"manifold", m}, {"n", n}}, true,
          m + "_" + str(n) + " is irreducible");
    }
    add(m + "-fingerprints", "fingerprints_distinct", {{"manifold", m}, {"n", n_list(p.n)}}, true,
        "distinct n give distinct SW fingerprints");
  } else if (id == "cor-irr") {
    for (int n = p.n.lo; n <= p.n.hi; ++n) {
      add("X-irreducible-n" + str(n), "check_irreducible", {{"manifold", "X"}, {"n", n}}, true, "X_n irreducible");
      add("Y-irreducible-n" + str(n), "check_irreducible", {{"manifold", "Y"}, {"n", n}}, true, "Y_n irreducible");
      add("X-homeo-n" + str(n), "homeo_equivalent", {{"a", "X_" + str(n)}, {"b", "CP2#5CP2bar"}}, true,
          "X_n is homeomorphic to CP2#5CP2bar");
      add("Y-homeo-n" + str(n), "homeo_equivalent", {{"a", "Y_" + str(n)}, {"b", "CP2#3CP2bar"}}, true,
          "Y_n is homeomorphic to CP2#3CP2bar");
    }
    add("X-fingerprints", "fingerprints_distinct", {{"manifold", "X"}, {"n", n_list(p.n)}}, true,
        "the X_n are pairwise non-diffeomorphic");
    add("Y-fingerprints", "fingerprints_distinct", {{"manifold", "Y"}, {"n", n_list(p.n)}}, true,
        "the Y_n are pairwise non-diffeomorphic");
  } else if (id == "thm-main") {
    for (int b2 = p.b2.lo; b2 <= p.b2.hi; ++b2) {
      for (int n = p.n.lo; n <= p.n.hi; ++n) {
        add("chambers-b2=" + str(b2) + "-n" + str(n), "chamber_containment", {{"n", n}, {"b2", b2}},
            {{"subset", true}, {"contains_n2", true}}, "cover values lie in {0,+-1,+-n^2,+-n^2+-1} and hit +-n^2");
        add("A-homeo-b2=" + str(b2) + "-n" + str(n), "homeo_equivalent",
            {{"a", "A_" + str(n) + "_b" + str(b2)}, {"b", "Z1#" + (b2 == 1 ? std::string() : str(b2)) + "CP2bar"}},
            true, "A_n is homeomorphic to Z1 # b2 CP2bar");
      }
      add("A-fingerprints-b2=" + str(b2), "fingerprints_distinct",
          {{"manifold", "A"}, {"n", n_list(p.n)}, {"b2", b2}}, true, "the covers of A_n are pairwise distinct");
    }
  } else if (id == "top-class") {
    for (int n = p.n.lo; n <= p.n.hi; ++n) {
      const std::string s = str(n);
      add("X-profile-n" + s, "profile", {{"name", "X_" + s}}, profile_expectation(8, -4, 1, 5, "trivial"),
          "chi = 8, sigma = -4, b2 = (1,5)");
      add("Y-profile-n" + s, "profile", {{"name", "Y_" + s}}, profile_expectation(6, -2, 1, 3, "trivial"),
          "chi = 6, sigma = -2, b2 = (1,3)");
      add("X'-profile-n" + s, "profile", {{"name", "X'_" + s}}, profile_expectation(4, -2, 0, 2, "z2"),
          "the quotient has chi = 4, sigma = -2");
      add("Y'-profile-n" + s, "profile", {{"name", "Y'_" + s}}, profile_expectation(3, -1, 0, 1, "z2"),
          "the quotient has chi = 3, sigma = -1");
      add("X-class-n" + s, "homeo_class", {{"name", "X_" + s}}, "SimplyConnectedOdd(1,5)",
          "X_n is homeomorphic to CP2#5CP2bar");
      add("X'-class-n" + s, "homeo_equivalent", {{"a", "X'_" + s}, {"b", "Z1#2CP2bar"}}, true,
          "X'_n is homeomorphic to Z1#2CP2bar");
      add("Y'-class-n" + s, "homeo_equivalent", {{"a", "Y'_" + s}, {"b", "Z1#CP2bar"}}, true,
          "Y'_n is homeomorphic to Z1#CP2bar");
      add("X'-pairwise-n" + s, "homeo_equivalent", {{"a", "X'_" + s}, {"b", "X'_" + str(p.n.lo)}}, true,
          "all X'_n are homeomorphic");
    }
    add("X-fingerprints", "fingerprints_distinct", {{"manifold", "X"}, {"n", n_list(p.n)}}, true,
        "homeomorphic but pairwise non-diffeomorphic");
    add("Z0-vs-Z1", "homeo_equivalent", {{"a", "Z0"}, {"b", "Z1"}}, false, "Z0 and Z1 differ in the spin bit");
  }
  return c;
}

}  // namespace

TheoremScenario default_scenario(std::string_view id, const json& params) {
  const auto& ids = scenario_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw InputError("unknown theorem id '" + std::string(id) + "'");
  }
  const Params p = read_params(id, params);
  return {std::string(id), params_json(p), default_checks(id, p)};
}

TheoremScenario scenario_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("scenario must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key != "id" && key != "params" && key != "checks") throw InputError("unknown scenario field '" + key + "'");
    }
    const auto id = j.at("id").get<std::string>();
    const bool known = std::find(scenario_ids().begin(), scenario_ids().end(), id) != scenario_ids().end();
    // Documents with their own checks may use any id; params are then passed through.
    TheoremScenario s = known || !j.contains("checks")
                            ? default_scenario(id, j.value("params", json::object()))
                            : TheoremScenario{id, j.value("params", json::object()), {}};
    if (j.contains("checks")) {
      s.checks.clear();
      for (const auto& c : j.at("checks")) {
        Check check;
        check.name = c.at("name").get<std::string>();
        check.op = c.at("op").get<std::string>();
        check.args = c.value("args", json::object());
        check.expect = c.at("expect");
        check.claim = c.value("claim", std::string());
        s.checks.push_back(std::move(check));
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed scenario: ") + e.what());
  }
}

json to_json(const TheoremScenario& s) {
  json checks = json::array();
  for (const auto& c : s.checks) {
    checks.push_back({{"name", c.name}, {"op", c.op}, {"args", c.args}, {"expect", c.expect}, {"claim", c.claim}});
  }
  return {{"id", s.id}, {"params", s.params}, {"checks", checks}};
}

namespace {

// Thrown when an enumeration bound was hit; carries the partial verdict.
struct BoundHit {
  json computed;
  std::string message;
};

int arg_int(const json& args, const char* key) {
  if (!args.contains(key) || !args.at(key).is_number_integer()) {
    throw InputError(std::string("argument '") + key + "' must be an integer");
  }
  return args.at(key).get<int>();
}

std::string arg_string(const json& args, const char* key) {
  if (!args.contains(key) || !args.at(key).is_string()) {
    throw InputError(std::string("argument '") + key + "' must be a string");
  }
  return args.at(key).get<std::string>();
}

fpgroup::Presentation builtin_presentation(const std::string& name, int n) {
  require_n(n);
  if (name == "xn") return xn_certificate(n);
  if (name == "yn") return yn_certificate(n);
  if (name == "v0") return v0_presentation(n);
  if (name == "w2") return w2_presentation(n);
  if (name == "xn-unglued") return xn_unglued(n);
  throw InputError("unknown builtin presentation '" + name + "'");
}

fpgroup::Presentation presentation_arg(const json& args) {
  fpgroup::Presentation p;
  if (args.contains("builtin")) {
    p = builtin_presentation(arg_string(args, "builtin"), arg_int(args, "n"));
  } else if (args.contains("text")) {
    p = fpgroup::parse_presentation(arg_string(args, "text"));
  } else {
    throw InputError("presentation argument needs 'builtin' or 'text'");
  }
  if (args.contains("permute_seed")) {
    std::vector<std::size_t> order(p.relators().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(args.at("permute_seed").get<std::uint64_t>());
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    p = p.with_relator_order(order);
  }
  return p;
}

std::shared_ptr<const lattice::IntLattice> lattice_arg(const json& args) {
  if (!args.contains("lattice")) throw InputError("missing 'lattice' argument");
  const json& l = args.at("lattice");
  if (l.is_string()) return build_block(l.get<std::string>()).lattice;
  return std::make_shared<const lattice::IntLattice>(lattice::lattice_from_json(l));
}

lattice::LatticeVector vector_arg(const json& args, const char* key, std::size_t rank) {
  if (!args.contains(key) || !args.at(key).is_array()) throw InputError(std::string("'") + key + "' must be an array");
  lattice::LatticeVector v(args.at(key).get<std::vector<std::int64_t>>());
  if (v.size() != rank) throw InputError(std::string("'") + key + "' has the wrong length");
  return v;
}

BuildOptions build_options(const ScenarioContext& ctx) {
  BuildOptions o;
  o.triviality = ctx.triviality;
  return o;
}

Construction construction_arg(const json& args, const ScenarioContext& ctx, bool certify = false) {
  const std::string m = arg_string(args, "manifold");
  BuildOptions o = build_options(ctx);
  o.certify_pi1 = certify;
  const int n = arg_int(args, "n");
  if (m == "X") return build_Xn(n, o);
  if (m == "Y") return build_Yn(n, o);
  if (m == "A") return build_An(n, arg_int(args, "b2"), o);
  throw InputError("manifold must be X, Y or A, got '" + m + "'");
}

json fingerprint_json(const sw::Fingerprint& f) {
  json out = json::array();
  for (const auto& [v, k2] : f) out.push_back({v, k2});
  return out;
}

// Fingerprint of the blow-up of s by `count`. Past the materialization
// limit each pair appears once instead of 2^count times; with a common count
// this preserves (in)equality.
sw::Fingerprint blown_up_fingerprint(const sw::SWState& s, std::int64_t count) {
  const bool expand = (s.support_size() << count) <= sw::kMaxBlowupClasses;
  sw::Fingerprint out;
  for (const auto& [v, k2] : sw::sw_fingerprint(s)) {
    const std::uint64_t copies = expand ? 1ULL << count : 1;
    for (std::uint64_t i = 0; i < copies; ++i) out.emplace_back(v, k2 - count);
  }
  std::sort(out.begin(), out.end());
  return out;
}

json candidates_json(const Block& b) {
  const auto candidates = sw::enumerate_basic_candidates(b.adjunction_config(), *b.lattice);
  const auto& l = *b.lattice;
  const lattice::IntMatrix basis = l.alternate_basis() ? l.alternate_basis()->vectors : lattice::IntMatrix::identity(l.rank());
  const auto& labels = l.alternate_basis() ? l.alternate_basis()->labels : l.basis_labels();
  json classes = json::array();
  for (const auto& k : candidates) {
    const auto raw = lattice::evaluations(l, k);
    json evals = json::object();
    for (std::size_t i = 0; i < l.rank(); ++i) {
      std::int64_t e = 0;
      for (std::size_t j = 0; j < l.rank(); ++j) e += basis(i, j) * raw[j];
      evals[labels[i]] = e;
    }
    const std::int64_t k2 = lattice::square(l, k);
    const auto d = sw::formal_dimension(k2, b.profile.chi, b.profile.sigma);
    classes.push_back({{"evaluations", evals}, {"square", k2}, {"dimension", d ? json(*d) : json("non-integral")}});
  }
  return {{"count", candidates.size()}, {"classes", classes}};
}

fpgroup::TrivialityResult solve_pi1(const fpgroup::Presentation& p, const ScenarioContext& ctx) {
  return ctx.pi1_solver ? ctx.pi1_solver(p, ctx.triviality) : fpgroup::is_trivial(p, ctx.triviality);
}

json evaluate(const Check& c, const ScenarioContext& ctx, std::vector<AxiomRecord>& axioms) {
  const json& a = c.args;
  const std::string& op = c.op;
  if (!a.is_object()) throw InputError("args must be an object");
  if (op == "is_trivial") {
    const auto r = solve_pi1(presentation_arg(a), ctx);
    if (r.verdict == fpgroup::Verdict::kUnknown) {
      throw BoundHit{"Unknown", "coset enumeration exceeded its bounds without a witness"};
    }
    return r.describe();
  }
  if (op == "abelianization") {
    const auto ab = fpgroup::abelianization(presentation_arg(a));
    return {{"free_rank", ab.free_rank}, {"torsion", ab.torsion_factors}};
  }
  if (op == "coset_index") {
    const auto p = presentation_arg(a);
    std::vector<fpgroup::Word> subgroup;
    for (const auto& w : a.value("subgroup", json::array())) subgroup.push_back(p.word(w.get<std::string>()));
    const auto out = fpgroup::coset_enumerate(p, subgroup, ctx.triviality.enumeration);
    if (!out.completed()) throw BoundHit{"bound exceeded", "coset enumeration exceeded its bounds"};
    return *out.index;
  }
  if (op == "finite_quotients") {
    fpgroup::QuotientScanOptions o;
    o.max_order = static_cast<std::uint32_t>(arg_int(a, "max_order"));
    return fpgroup::finite_quotient_scan(presentation_arg(a), o).size();
  }
  if (op == "enumerate_basic_candidates") {
    const Block b = build_block(arg_string(a, "block"));
    for (const auto& ax : b.axioms) axioms.push_back(ax);
    return candidates_json(b);
  }
  if (op == "lattice_rank") return lattice_arg(a)->rank();
  if (op == "signature_and_parity") return lattice::to_json(lattice::signature_and_parity(*lattice_arg(a)));
  if (op == "pairing") {
    const auto l = lattice_arg(a);
    return lattice::pairing(*l, vector_arg(a, "v", l->rank()), vector_arg(a, "w", l->rank()));
  }
  if (op == "is_characteristic") {
    if (a.contains("k") && a.at("k") == "candidates") {
      const Block b = build_block(arg_string(a, "lattice"));
      json out = json::array();
      for (const auto& k : sw::enumerate_basic_candidates(b.adjunction_config(), *b.lattice)) {
        out.push_back(lattice::is_characteristic(*b.lattice, k));
      }
      return out;
    }
    const auto l = lattice_arg(a);
    return lattice::is_characteristic(*l, vector_arg(a, "k", l->rank()));
  }
  if (op == "formal_dimension") {
    const auto d = sw::formal_dimension(arg_int(a, "k_squared"), arg_int(a, "chi"), arg_int(a, "sigma"));
    return d ? json(*d) : json("non-integral");
  }
  if (op == "torus_surgery_sw") {
    return sw::torus_surgery_sw(arg_int(a, "f10"), arg_int(a, "f01"), arg_int(a, "p"), arg_int(a, "q"));
  }
  if (op == "surgery_chain") {
    const Construction con = construction_arg(a, ctx);
    for (const auto& ax : con.axioms) axioms.push_back(ax);
    return con.chain_trace;
  }
  if (op == "sw_state") {
    const Construction con = construction_arg(a, ctx);
    for (const auto& ax : con.axioms) axioms.push_back(ax);
    json magnitudes = json::array(), squares = json::array();
    for (const auto& [v, k2] : sw::sw_fingerprint(*con.sw)) {
      magnitudes.push_back(v);
      squares.push_back(k2);
    }
    return {{"support", con.sw->support_size()}, {"magnitudes", magnitudes}, {"squares", squares}};
  }
  if (op == "sw_fingerprint") return fingerprint_json(sw::sw_fingerprint(*construction_arg(a, ctx).sw));
  if (op == "check_irreducible") {
    const Construction con = construction_arg(a, ctx);
    if (!con.sw) throw ResourceError("state too large to check pairwise");
    return sw::check_irreducible(*con.sw);
  }
  if (op == "fingerprints_distinct") {
    if (!a.contains("n") || !a.at("n").is_array()) throw InputError("'n' must be a list");
    std::vector<sw::Fingerprint> prints;
    for (const auto& n : a.at("n")) {
      json one = a;
      one["n"] = n;
      if (arg_string(a, "manifold") == "A") {
        const int b2 = arg_int(a, "b2");
        require_b2(b2);
        const Construction y = build_Yn(n.get<int>(), [&] {
          auto o = build_options(ctx);
          o.certify_pi1 = false;
          return o;
        }());
        prints.push_back(b2 == 1 ? sw::sw_fingerprint(*y.sw) : blown_up_fingerprint(*y.sw, 2 * b2 - 2));
      } else {
        prints.push_back(sw::sw_fingerprint(*construction_arg(one, ctx).sw));
      }
    }
    std::set<sw::Fingerprint> unique(prints.begin(), prints.end());
    return unique.size() == prints.size();
  }
  if (op == "chamber_containment") {
    const int n = arg_int(a, "n");
    const int b2 = arg_int(a, "b2");
    require_n(n);
    const std::int64_t v = static_cast<std::int64_t>(n) * n;
    const std::set<std::int64_t> allowed{0, 1, -1, v, -v, v + 1, v - 1, -v + 1, -v - 1};
    const auto values = an_cover_chamber_union(n, b2);
    const bool subset = std::includes(allowed.begin(), allowed.end(), values.begin(), values.end());
    axioms.push_back({"chamber-spread", "with b2+ = 1 each chamber value lies within 1 of the computed value", {}});
    return {{"subset", subset}, {"contains_n2", values.count(v) != 0 && values.count(-v) != 0}};
  }
  if (op == "profile") {
    const auto p = lookup_profile(arg_string(a, "name"), build_options(ctx));
    const auto split = manifold::betti_split(p);
    return {{"chi", p.chi},
            {"sigma", p.sigma},
            {"b1", p.b1},
            {"betti_split", {split.b2plus, split.b2minus}},
            {"pi1", manifold::to_string(p.pi1)}};
  }
  if (op == "homeo_class") {
    return manifold::to_string(manifold::homeo_classify(lookup_profile(arg_string(a, "name"), build_options(ctx))));
  }
  if (op == "homeo_equivalent") {
    const auto o = build_options(ctx);
    const auto pa = lookup_profile(arg_string(a, "a"), o);
    const auto pb = lookup_profile(arg_string(a, "b"), o);
    for (const auto* p : {&pa, &pb}) {
      axioms.push_back({"homeo:" + p->name, manifold::homeo_classify(*p).axiom, {}});
    }
    return manifold::homeo_equivalent(pa, pb);
  }
  throw InputError("unknown check op '" + op + "'");
}

}  // namespace

json evaluate_check(const Check& c, const ScenarioContext& ctx, std::vector<AxiomRecord>* axioms) {
  std::vector<AxiomRecord> local;
  try {
    return evaluate(c, ctx, axioms ? *axioms : local);
  } catch (const BoundHit& hit) {
    throw ResourceError(hit.message);
  }
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::kPass; });
}

int Report::exit_code() const {
  int code = 0;
  for (const auto& c : checks) {
    switch (c.status) {
      case CheckStatus::kPass: break;
      case CheckStatus::kResource: code = 3; break;
      case CheckStatus::kInput:
        if (code < 2) code = 2;
        break;
      default:
        if (code < 1) code = 1;
    }
  }
  return code;
}

Report run_theorem_scenario(const TheoremScenario& s, const ScenarioContext& ctx) {
  Report r;
  r.scenario = s.id;
  r.params = s.params;
  for (const auto& check : s.checks) {
    CheckResult result;
    result.check = check;
    std::vector<AxiomRecord> used;
    try {
      result.computed = evaluate(check, ctx, used);
      result.status = result.computed == check.expect ? CheckStatus::kPass : CheckStatus::kFail;
    } catch (const BoundHit& hit) {
      result.computed = hit.computed;
      result.status = CheckStatus::kResource;
      result.message = hit.message;
    } catch (const ResourceError& e) {
      result.status = CheckStatus::kResource;
      result.message = e.what();
    } catch (const InputError& e) {
      result.status = CheckStatus::kInput;
      result.message = e.what();
    } catch (const UnsupportedError& e) {
      result.status = CheckStatus::kUnsupported;
      result.message = e.what();
    } catch (const std::exception& e) {
      result.status = CheckStatus::kInternal;
      result.message = e.what();
    }
    std::set<std::string> ids;
    for (auto& ax : used) {
      ids.insert(ax.id);
      r.axioms.emplace(ax.id, std::move(ax));
    }
    result.axioms.assign(ids.begin(), ids.end());
    r.checks.push_back(std::move(result));
  }
  return r;
}

json to_json(const Report& r) {
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::kPass) ++passed;
    json entry = {{"name", c.check.name},
                  {"op", c.check.op},
                  {"claim", c.check.claim},
                  {"args", c.check.args},
                  {"expected", c.check.expect},
                  {"computed", c.computed},
                  {"status", to_string(c.status)},
                  {"passed", c.status == CheckStatus::kPass},
                  {"axioms", c.axioms}};
    if (!c.message.empty()) entry["message"] = c.message;
    checks.push_back(std::move(entry));
  }
  json axioms = json::array();
  for (const auto& [id, a] : r.axioms) axioms.push_back(to_json(a));
  return {{"schema_version", kReportSchemaVersion},
          {"scenario", r.scenario},
          {"params", r.params},
          {"passed", r.passed()},
          {"summary", {{"total", r.checks.size()}, {"passed", passed}, {"failed", r.checks.size() - passed}}},
          {"checks", checks},
          {"axioms", axioms}};
}

namespace {

std::string clip(std::string s, std::size_t width) {
  if (s.size() > width) s = s.substr(0, width - 3) + "...";
  return s;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_table(const json& report) {
  try {
    if (report.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw InputError("unsupported report schema_version");
    }
    std::ostringstream os;
    os << "scenario " << report.at("scenario").get<std::string>() << "  params " << report.at("params").dump() << "\n";
    std::size_t name_width = 4;
    for (const auto& c : report.at("checks")) name_width = std::max(name_width, c.at("name").get<std::string>().size());
    name_width = std::min<std::size_t>(name_width, 32);
    os << pad("STATUS", 14) << pad("CHECK", name_width + 2) << pad("COMPUTED", 34) << "EXPECTED\n";
    for (const auto& c : report.at("checks")) {
      os << pad(c.at("status").get<std::string>(), 14) << pad(clip(c.at("name").get<std::string>(), 32), name_width + 2)
         << pad(clip(c.at("computed").dump(), 32), 34) << clip(c.at("expected").dump(), 40) << "\n";
      if (c.contains("message")) os << "    " << c.at("message").get<std::string>() << "\n";
    }
    const auto& summary = report.at("summary");
    os << (report.at("passed").get<bool>() ? "PASS" : "FAIL") << "  " << summary.at("passed").get<std::size_t>() << "/"
       << summary.at("total").get<std::size_t>() << " checks passed\n";
    if (!report.at("axioms").empty()) {
      os << "axioms:\n";
      for (const auto& a : report.at("axioms")) {
        os << "  " << a.at("id").get<std::string>() << ": " << a.at("justification").get<std::string>() << "\n";
      }
    }
    return os.str();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace fourcalc::constructions
