#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fourcalc/cache.hpp"
#include "fourcalc/cli.hpp"
#include "fourcalc/constructions/presentations.hpp"
#include "fourcalc/fpgroup/presentation.hpp"

using fourcalc::cli::run;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("fourcalc-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(call({"verify", "--theorem", "fund-Xn", "--n", "1..5"}).code == 0);
  CHECK(call({"verify", "--theorem", "nonsense"}).code == 2);
  CHECK(call({"verify", "--theorem", "thm-X-SW", "--n", "0"}).code == 2);
  CHECK(call({"verify", "--theorem", "fund-Xn", "--format", "xml"}).code == 2);
  CHECK(call({"verify", "--theorem", "fund-Xn", "--unknown-flag"}).code == 2);
  CHECK(call({"verify", "--theorem", "fund-Xn", "--n", "1..2", "--max-cosets", "4"}).code == 3);
  CHECK(call({}).code == 2);
}

TEST_CASE("verify output is deterministic json") {
  const auto a = call({"verify", "--theorem", "thm-b2=2", "--n", "1..3"});
  const auto b = call({"verify", "--theorem", "thm-b2=2", "--n", "1..3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("passed") == true);
}

TEST_CASE("verify writes --out and report re-renders it") {
  const auto dir = scratch("report");
  const auto path = (dir / "r.json").string();
  CHECK(call({"verify", "--theorem", "lem-U", "--out", path}).code == 0);
  const auto table = call({"report", "--in", path, "--format", "table"});
  CHECK(table.code == 0);
  CHECK(table.out.find("lem-U") != std::string::npos);
  CHECK(call({"report", "--in", (dir / "missing.json").string()}).code == 2);
}

TEST_CASE("verify accepts scenario documents") {
  const auto dir = scratch("scenario");
  write(dir / "s.json", R"({"id":"custom","checks":[{"name":"rank","op":"lattice_rank","args":{"lattice":"R"},"expect":12}]})");
  CHECK(call({"verify", "--scenario", (dir / "s.json").string()}).code == 0);
  write(dir / "f.json", R"({"id":"custom","checks":[{"name":"rank","op":"lattice_rank","args":{"lattice":"R"},"expect":11}]})");
  CHECK(call({"verify", "--scenario", (dir / "f.json").string()}).code == 1);
  write(dir / "bad.json", "{not json");
  CHECK(call({"verify", "--scenario", (dir / "bad.json").string()}).code == 2);
}

TEST_CASE("pi1 command") {
  auto r = call({"pi1", "--builtin", "xn", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("verdict") == "Trivial");
  r = call({"pi1", "--text", "gens: a; rels: a^2", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Nontrivial(abelianization Z/2)") != std::string::npos);
  r = call({"pi1", "--text", "gens: a; rels: ["});
  CHECK(r.code == 2);
  CHECK(r.err.find("column") != std::string::npos);
  CHECK(call({"pi1", "--text", "gens: a b; rels: a^2 b^3 (a*b)^5", "--max-cosets", "10"}).code == 3);
  CHECK(call({"pi1", "--text", "gens: a; rels: a", "--strategy", "bogus"}).code == 2);
}

TEST_CASE("sw command") {
  auto r = call({"sw", "--builtin", "xn", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("final") == 16);
  const auto dir = scratch("sw");
  write(dir / "empty.json", R"({"base_value": 7, "steps": []})");
  r = call({"sw", "--chain", (dir / "empty.json").string()});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("final") == 7);
  write(dir / "bad.json", R"({"base_value": 1, "steps": [{"torus": "T", "p": 2, "q": 4}]})");
  CHECK(call({"sw", "--chain", (dir / "bad.json").string()}).code == 2);
  write(dir / "f01.json", R"({"base_value": 1, "steps": [{"torus": "T", "p": 2, "q": 3, "f01": 5}]})");
  r = call({"sw", "--chain", (dir / "f01.json").string()});
  CHECK(nlohmann::json::parse(r.out).at("final") == 17);
  write(dir / "missing.json", R"({"base_value": 1, "steps": [{"torus": "T", "p": 2, "q": 3}]})");
  CHECK(call({"sw", "--chain", (dir / "missing.json").string()}).code == 2);
}

TEST_CASE("classify command") {
  auto r = call({"classify", "--profile", "X_3", "--profile", "CP2#5CP2bar"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("homeomorphic") == true);
  r = call({"classify", "--profile", "Z0", "--profile", "Z1"});
  CHECK(nlohmann::json::parse(r.out).at("homeomorphic") == false);
  CHECK(call({"classify", "--profile", "T4"}).code == 2);
  CHECK(call({"classify"}).code == 2);
}

TEST_CASE("certificate cache") {
  const auto dir = scratch("cache");
  const fourcalc::cli::CertificateCache cache(dir);
  const auto p = fourcalc::constructions::xn_certificate(2);
  fourcalc::fpgroup::EnumerationConfig config;
  CHECK_FALSE(cache.lookup(p, config));
  const auto first = cache.enumerate(p, config);
  REQUIRE(first.completed());
  CHECK(fs::exists(cache.entry_path(p, config)));
  const auto hit = cache.lookup(p, config);
  REQUIRE(hit);
  CHECK(hit->index == first.index);
  CHECK(hit->table == first.table);
  auto other = config;
  other.bounds.max_cosets = 999'999;
  CHECK_FALSE(cache.lookup(p, other));
  other = config;
  other.strategy = fourcalc::fpgroup::Strategy::kFelsch;
  CHECK_FALSE(cache.lookup(p, other));

  const auto bounded = fourcalc::fpgroup::parse_presentation("gens: a b; rels: a^2 b^3 (a*b)^7");
  auto tight = config;
  tight.bounds.max_cosets = 50;
  CHECK(cache.enumerate(bounded, tight).bound_exceeded());
  CHECK_FALSE(fs::exists(cache.entry_path(bounded, tight)));

  write(cache.entry_path(p, config), "garbage");
  CHECK_FALSE(cache.lookup(p, config));
}

TEST_CASE("cache hits and misses give identical reports") {
  const auto dir = scratch("cache-report");
  const std::vector<std::string> args{"verify", "--theorem", "fund-Yn", "--n", "1..3", "--cache-dir", dir.string()};
  const auto cold = call(args);
  const auto warm = call(args);
  const auto none = call({"verify", "--theorem", "fund-Yn", "--n", "1..3"});
  CHECK(cold.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out == none.out);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) > 0);

  const auto env_dir = scratch("cache-env");
  ::setenv("FOURCALC_CACHE", env_dir.c_str(), 1);
  CHECK(call({"pi1", "--builtin", "yn", "--n", "1"}).code == 0);
  ::unsetenv("FOURCALC_CACHE");
  CHECK(std::distance(fs::directory_iterator(env_dir), fs::directory_iterator{}) == 1);
}
