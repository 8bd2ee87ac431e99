#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fourcalc/constructions/blocks.hpp"
#include "fourcalc/fpgroup/triviality.hpp"

namespace fourcalc::constructions {

constexpr int kReportSchemaVersion = 1;

struct Check {
  std::string name;
  std::string op;
  nlohmann::json args = nlohmann::json::object();
  nlohmann::json expect;
  std::string claim;
};

struct TheoremScenario {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
};

const std::vector<std::string>& scenario_ids();

struct IntRange {
  int lo = 1;
  int hi = 1;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

// Accepts "a..b", "a", an integer or [a, b].
IntRange parse_range(const nlohmann::json& j, std::string_view what);

// Fills in default params and checks for a known id. Throws InputError for
// unknown ids, unknown params or out-of-range values.
TheoremScenario default_scenario(std::string_view id, const nlohmann::json& params = nlohmann::json::object());

// {id, params, checks?}; missing checks fall back to the defaults.
TheoremScenario scenario_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TheoremScenario& s);

struct ScenarioContext {
  fpgroup::TrivialityConfig triviality;
  // Replaces fpgroup::is_trivial, e.g. with a caching front end.
  std::function<fpgroup::TrivialityResult(const fpgroup::Presentation&, const fpgroup::TrivialityConfig&)> pi1_solver;
};

enum class CheckStatus { kPass, kFail, kResource, kInput, kUnsupported, kInternal };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  Check check;
  nlohmann::json computed;
  CheckStatus status = CheckStatus::kFail;
  std::string message;
  std::vector<std::string> axioms;
};

struct Report {
  std::string scenario;
  nlohmann::json params;
  std::vector<CheckResult> checks;
  std::map<std::string, AxiomRecord> axioms;

  bool passed() const;
  // 0 pass, 1 fail, 2 input error in a check, 3 resource bound hit.
  int exit_code() const;
};

// Component errors fail the offending check only.
Report run_theorem_scenario(const TheoremScenario& s, const ScenarioContext& ctx = {});

// Evaluates one check operation; exposed for tests.
nlohmann::json evaluate_check(const Check& c, const ScenarioContext& ctx, std::vector<AxiomRecord>* axioms = nullptr);

nlohmann::json to_json(const Report& r);
// Human-readable rendering of a report JSON document.
std::string render_table(const nlohmann::json& report);

}  // namespace fourcalc::constructions
