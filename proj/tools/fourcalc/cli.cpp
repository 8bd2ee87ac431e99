#include "fourcalc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fourcalc/cache.hpp"
#include "fourcalc/constructions/builds.hpp"
#include "fourcalc/constructions/presentations.hpp"
#include "fourcalc/constructions/scenario.hpp"
#include "fourcalc/errors.hpp"
#include "fourcalc/manifold/homeo.hpp"
#include "fourcalc/sw/invariants.hpp"

namespace fourcalc::cli {
namespace {

using nlohmann::json;
namespace cs = constructions;

struct Options {
  std::string theorem;
  std::string scenario_file;
  std::string n;
  std::string b2;
  std::int64_t max_cosets = fpgroup::EnumerationBounds{}.max_cosets;
  std::int64_t max_definitions = fpgroup::EnumerationBounds{}.max_definitions;
  std::string strategy = "hlt";
  std::string format = "json";
  std::string out_path;
  std::string cache_dir;
  std::string builtin;
  std::string text;
  std::string file;
  std::string chain_file;
  std::vector<std::string> profiles;
  std::string profile_file;
  std::string report_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

fpgroup::TrivialityConfig triviality_config(const Options& o) {
  fpgroup::TrivialityConfig c;
  if (o.max_cosets < 1 || o.max_definitions < 1) throw InputError("bounds must be positive");
  c.enumeration.bounds.max_cosets = o.max_cosets;
  c.enumeration.bounds.max_definitions = o.max_definitions;
  const auto strategy = fpgroup::parse_strategy(o.strategy);
  if (!strategy) throw InputError("unknown strategy '" + o.strategy + "' (expected hlt or felsch)");
  c.enumeration.strategy = *strategy;
  return c;
}

std::optional<std::string> cache_dir(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv("FOURCALC_CACHE"); env != nullptr && *env != '\0') return std::string(env);
  return std::nullopt;
}

std::shared_ptr<CertificateCache> open_cache(const Options& o) {
  const auto dir = cache_dir(o);
  return dir ? std::make_shared<CertificateCache>(*dir) : nullptr;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + o.out_path + "'");
  f << text;
}

void require_format(const Options& o) {
  if (o.format != "json" && o.format != "table") throw InputError("--format must be json or table");
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o);
  cs::TheoremScenario scenario;
  if (!o.scenario_file.empty() && !o.theorem.empty()) throw InputError("use either --theorem or --scenario");
  if (!o.scenario_file.empty()) {
    json doc = read_json_file(o.scenario_file);
    if (!o.n.empty() || !o.b2.empty()) {
      if (!doc.is_object()) throw InputError("scenario must be a JSON object");
      json params = doc.value("params", json::object());
      if (!o.n.empty()) params["n"] = o.n;
      if (!o.b2.empty()) params["b2"] = o.b2;
      doc["params"] = params;
    }
    scenario = cs::scenario_from_json(doc);
  } else {
    if (o.theorem.empty()) throw InputError("verify needs --theorem or --scenario");
    json params = json::object();
    if (!o.n.empty()) params["n"] = o.n;
    if (!o.b2.empty()) params["b2"] = o.b2;
    scenario = cs::default_scenario(o.theorem, params);
  }
  cs::ScenarioContext ctx;
  ctx.triviality = triviality_config(o);
  if (auto cache = open_cache(o)) {
    ctx.pi1_solver = [cache](const fpgroup::Presentation& p, const fpgroup::TrivialityConfig& c) {
      return fpgroup::is_trivial(p, c, [&](const fpgroup::Presentation& q, const fpgroup::EnumerationConfig& e) {
        return cache->enumerate(q, e);
      });
    };
  }
  const cs::Report report = cs::run_theorem_scenario(scenario, ctx);
  const json j = cs::to_json(report);
  emit(o, o.format == "json" ? j.dump(2) + "\n" : cs::render_table(j), out);
  return report.exit_code();
}

fpgroup::Presentation presentation_source(const Options& o) {
  const int given = !o.builtin.empty() + !o.text.empty() + !o.file.empty();
  if (given != 1) throw InputError("give exactly one of --builtin, --text, --file");
  if (!o.builtin.empty()) {
    if (o.n.empty()) throw InputError("--builtin needs --n");
    const auto range = cs::parse_range(json(o.n), "n");
    if (range.lo != range.hi) throw InputError("--builtin takes a single --n");
    cs::require_n(range.lo);
    if (o.builtin == "xn") return cs::xn_certificate(range.lo);
    if (o.builtin == "yn") return cs::yn_certificate(range.lo);
    if (o.builtin == "v0") return cs::v0_presentation(range.lo);
    if (o.builtin == "w2") return cs::w2_presentation(range.lo);
    if (o.builtin == "xn-unglued") return cs::xn_unglued(range.lo);
    throw InputError("unknown builtin '" + o.builtin + "' (expected xn, yn, v0, w2, xn-unglued)");
  }
  return fpgroup::parse_presentation(o.text.empty() ? read_file(o.file) : o.text);
}

int cmd_pi1(const Options& o, std::ostream& out) {
  require_format(o);
  const fpgroup::Presentation p = presentation_source(o);
  const auto config = triviality_config(o);
  const auto cache = open_cache(o);
  fpgroup::TrivialEnumerator enumerate;
  if (cache) {
    enumerate = [cache](const fpgroup::Presentation& q, const fpgroup::EnumerationConfig& e) {
      return cache->enumerate(q, e);
    };
  }
  const auto result = fpgroup::is_trivial(p, config, enumerate);
  json j = {{"presentation", fpgroup::to_string(p)},
            {"strategy", fpgroup::to_string(config.enumeration.strategy)},
            {"verdict", fpgroup::to_string(result.verdict)},
            {"summary", result.describe()}};
  if (result.witness) j["witness"] = result.witness->describe();
  const auto& e = result.enumeration;
  if (e.cosets_defined > 0 || e.completed()) {
    j["enumeration"] = {{"completed", e.completed()},
                        {"index", e.index ? json(*e.index) : json(nullptr)},
                        {"cosets_defined", e.cosets_defined},
                        {"max_live_cosets", e.max_live_cosets}};
  }
  if (o.format == "json") {
    emit(o, j.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    os << result.describe() << "\n";
    if (j.contains("enumeration")) {
      os << "cosets defined " << e.cosets_defined << ", max live " << e.max_live_cosets << "\n";
    }
    emit(o, os.str(), out);
  }
  return result.verdict == fpgroup::Verdict::kUnknown ? kResourceError : kPass;
}

struct ChainSpec {
  std::int64_t base_value = 1;
  std::vector<sw::SurgerySpec> steps;
  std::vector<bool> vanishing;
  std::vector<std::optional<std::int64_t>> f01;
  std::optional<std::string> block;
};

ChainSpec chain_from_json(const json& j) {
  try {
    ChainSpec c;
    for (const auto& [key, value] : j.items()) {
      if (key != "base_value" && key != "steps" && key != "block") throw InputError("unknown chain field '" + key + "'");
    }
    c.base_value = j.value("base_value", std::int64_t{1});
    if (j.contains("block")) c.block = j.at("block").get<std::string>();
    for (const auto& s : j.value("steps", json::array())) {
      sw::SurgerySpec spec;
      spec.torus_label = s.value("torus", std::string("T"));
      spec.p = s.at("p").get<std::int64_t>();
      spec.q = s.at("q").get<std::int64_t>();
      spec.luttinger = s.value("luttinger", false);
      if (s.contains("kills")) {
        const auto kills = s.at("kills").get<std::vector<std::string>>();
        if (kills.size() != 2) throw InputError("'kills' must name two basis labels");
        spec.kills_pair = std::make_pair(kills[0], kills[1]);
      }
      sw::require_coprime(spec.p, spec.q);
      c.vanishing.push_back(s.value("vanishing", false));
      c.f01.push_back(s.contains("f01") && !s.at("f01").is_null() ? std::optional(s.at("f01").get<std::int64_t>())
                                                                  : std::nullopt);
      c.steps.push_back(std::move(spec));
    }
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed chain spec: ") + e.what());
  }
}

ChainSpec builtin_chain(const std::string& which, int n) {
  ChainSpec c;
  c.block = which == "xn" ? "U" : which == "yn" ? "R" : throw InputError("--builtin for sw must be xn or yn");
  c.steps = cs::surgery_chain_specs(n);
  c.vanishing.assign(c.steps.size(), true);
  c.f01.assign(c.steps.size(), std::nullopt);
  return c;
}

json fingerprint_json(const sw::Fingerprint& f) {
  json out = json::array();
  for (const auto& [v, k2] : f) out.push_back({{"abs_value", v}, {"square", k2}});
  return out;
}

int cmd_sw(const Options& o, std::ostream& out) {
  require_format(o);
  ChainSpec chain;
  if (!o.chain_file.empty() && !o.builtin.empty()) throw InputError("use either --chain or --builtin");
  if (!o.chain_file.empty()) {
    chain = chain_from_json(read_json_file(o.chain_file));
  } else if (!o.builtin.empty()) {
    if (o.n.empty()) throw InputError("--builtin needs --n");
    const auto r = cs::parse_range(json(o.n), "n");
    if (r.lo != r.hi) throw InputError("--builtin takes a single --n");
    cs::require_n(r.lo);
    chain = builtin_chain(o.builtin, r.lo);
  } else {
    throw InputError("sw needs --chain or --builtin");
  }
  // Vanishing flags and supplied F(0,1) values are looked up by step position.
  std::size_t position = 0;
  const auto vanishing = [&](const sw::SurgerySpec&) { return bool(chain.vanishing[position]); };
  const auto f01 = [&](const sw::SurgerySpec&) { return chain.f01[position]; };
  std::vector<std::int64_t> trace{std::llabs(chain.base_value)};
  for (position = 0; position < chain.steps.size(); ++position) {
    trace.push_back(sw::run_surgery_chain(trace.back(), std::span(&chain.steps[position], 1), vanishing, f01));
  }
  json j = {{"base_value", chain.base_value}, {"trace", trace}, {"final", trace.back()}};
  json steps = json::array();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& s = chain.steps[i];
    steps.push_back({{"torus", s.torus_label}, {"p", s.p}, {"q", s.q}, {"value", trace[i + 1]}});
  }
  j["steps"] = steps;
  if (chain.block) {
    const auto block = cs::build_block(*chain.block);
    const auto base = cs::base_state(block);
    std::vector<std::int64_t> scaled;
    const auto all_vanish = [&](const sw::SurgerySpec& s) {
      for (std::size_t i = 0; i < chain.steps.size(); ++i)
        if (chain.steps[i] == s) return bool(chain.vanishing[i]);
      return false;
    };
    const auto state = sw::apply_surgery_chain(base, chain.steps, all_vanish, block.id + "-surgered");
    j["state"] = sw::to_json(state);
    j["fingerprint"] = fingerprint_json(sw::sw_fingerprint(state));
  }
  if (o.format == "json") {
    emit(o, j.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    os << "base " << std::llabs(chain.base_value) << "\n";
    for (const auto& s : j["steps"]) {
      os << "surgery " << s["torus"].get<std::string>() << " (" << s["p"] << "," << s["q"] << ") -> |SW| "
         << s["value"] << "\n";
    }
    os << "final " << trace.back() << "\n";
    if (j.contains("fingerprint")) os << "fingerprint " << j["fingerprint"].dump() << "\n";
    emit(o, os.str(), out);
  }
  return kPass;
}

int cmd_classify(const Options& o, std::ostream& out) {
  require_format(o);
  std::vector<manifold::ManifoldProfile> profiles;
  cs::BuildOptions build;
  build.triviality = triviality_config(o);
  for (const auto& name : o.profiles) profiles.push_back(cs::lookup_profile(name, build));
  if (!o.profile_file.empty()) {
    const json doc = read_json_file(o.profile_file);
    if (doc.is_array()) {
      for (const auto& p : doc) profiles.push_back(manifold::profile_from_json(p));
    } else {
      profiles.push_back(manifold::profile_from_json(doc));
    }
  }
  if (profiles.empty() || profiles.size() > 2) throw InputError("classify takes one or two profiles");
  json j = json::object();
  json entries = json::array();
  for (const auto& p : profiles) {
    const auto split = manifold::betti_split(p);
    const auto c = manifold::homeo_classify(p);
    entries.push_back({{"profile", manifold::to_json(p)},
                       {"betti_split", {split.b2plus, split.b2minus}},
                       {"class", manifold::to_string(c)},
                       {"axiom", c.axiom}});
  }
  j["profiles"] = entries;
  if (profiles.size() == 2) j["homeomorphic"] = manifold::homeo_equivalent(profiles[0], profiles[1]);
  if (o.format == "json") {
    emit(o, j.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    for (const auto& e : entries) {
      const auto& p = e["profile"];
      os << p["name"].get<std::string>() << ": chi " << p["chi"] << ", sigma " << p["sigma"] << ", b1 " << p["b1"]
         << ", pi1 " << p["pi1"].get<std::string>() << ", b2+/- " << e["betti_split"][0] << "/" << e["betti_split"][1]
         << " -> " << e["class"].get<std::string>() << " [" << e["axiom"].get<std::string>() << "]\n";
    }
    if (j.contains("homeomorphic")) os << "homeomorphic: " << (j["homeomorphic"].get<bool>() ? "yes" : "no") << "\n";
    emit(o, os.str(), out);
  }
  return kPass;
}

int cmd_report(const Options& o, std::ostream& out) {
  require_format(o);
  if (o.report_file.empty()) throw InputError("report needs --in");
  const json j = read_json_file(o.report_file);
  const std::string table = cs::render_table(j);  // validates the document
  emit(o, o.format == "json" ? j.dump(2) + "\n" : table, out);
  return j.at("passed").get<bool>() ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"fourcalc: exotic 4-manifold certificate checker"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fourcalc 0.1.0");

  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-cosets", o.max_cosets, "coset table bound")->capture_default_str();
    sub->add_option("--max-definitions", o.max_definitions, "coset definition bound")->capture_default_str();
    sub->add_option("--strategy", o.strategy, "hlt or felsch")->capture_default_str();
    sub->add_option("--cache-dir", o.cache_dir, "certificate cache (else $FOURCALC_CACHE; default off)");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or table")->capture_default_str();
    sub->add_option("--out", o.out_path, "write output here instead of stdout");
  };

  auto* verify = app.add_subcommand("verify", "run a theorem scenario");
  verify->add_option("--theorem", o.theorem, "scenario id");
  verify->add_option("--scenario", o.scenario_file, "scenario JSON document");
  verify->add_option("--n", o.n, "n or a..b");
  verify->add_option("--b2", o.b2, "b2 or a..b (thm-main)");
  add_bounds(verify);
  add_output(verify);

  auto* pi1 = app.add_subcommand("pi1", "decide triviality of a presented group");
  pi1->add_option("--builtin", o.builtin, "xn, yn, v0, w2 or xn-unglued");
  pi1->add_option("--n", o.n, "parameter for --builtin");
  pi1->add_option("--text", o.text, "presentation text");
  pi1->add_option("--file", o.file, "presentation file");
  add_bounds(pi1);
  add_output(pi1);

  auto* swc = app.add_subcommand("sw", "run a torus-surgery chain");
  swc->add_option("--chain", o.chain_file, "chain spec JSON");
  swc->add_option("--builtin", o.builtin, "xn or yn");
  swc->add_option("--n", o.n, "parameter for --builtin");
  add_output(swc);

  auto* classify = app.add_subcommand("classify", "homeomorphism class of profiles");
  classify->add_option("--profile", o.profiles, "profile name, e.g. X_3 or Z1#2CP2bar (up to two)");
  classify->add_option("--profile-file", o.profile_file, "profile JSON (object or array)");
  add_bounds(classify);
  add_output(classify);

  auto* report = app.add_subcommand("report", "render a saved report");
  report->add_option("--in", o.report_file, "report JSON")->required();
  add_output(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    if (app.get_subcommands().size() == 1) {
      // help for a subcommand
      if (std::string(e.get_name()) == "CallForHelp") {
        out << app.get_subcommands().front()->help();
        return kPass;
      }
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (pi1->parsed()) return cmd_pi1(o, out);
    if (swc->parsed()) return cmd_sw(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (report->parsed()) return cmd_report(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "error: resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}

}  // namespace fourcalc::cli
