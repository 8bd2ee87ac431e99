#include "fourcalc/cache.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fourcalc/errors.hpp"

namespace fourcalc::cli {

std::uint64_t content_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string key_text(const fpgroup::Presentation& p, const fpgroup::EnumerationConfig& config) {
  std::string text = fpgroup::to_string(p);
  text += "\nstrategy: ";
  text += fpgroup::to_string(config.strategy);
  if (config.strategy == fpgroup::Strategy::kHlt && !config.lookahead) text += " no-lookahead";
  return text;
}

}  // namespace

CertificateCache::CertificateCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw InputError("cannot create cache directory '" + dir_.string() + "': " + ec.message());
}

std::filesystem::path CertificateCache::entry_path(const fpgroup::Presentation& p,
                                                   const fpgroup::EnumerationConfig& config) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << content_hash(key_text(p, config)) << ".json";
  return dir_ / name.str();
}

std::optional<fpgroup::EnumerationOutcome> CertificateCache::lookup(const fpgroup::Presentation& p,
                                                                    const fpgroup::EnumerationConfig& config) const {
  std::ifstream in(entry_path(p, config));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key_text(p, config)) return std::nullopt;
    if (j.at("bounds").at("max_cosets").get<std::int64_t>() != config.bounds.max_cosets ||
        j.at("bounds").at("max_definitions").get<std::int64_t>() != config.bounds.max_definitions) {
      return std::nullopt;
    }
    fpgroup::EnumerationOutcome out;
    out.index = j.at("index").get<std::int64_t>();
    out.cosets_defined = j.at("cosets_defined").get<std::int64_t>();
    out.max_live_cosets = j.at("max_live_cosets").get<std::int64_t>();
    fpgroup::CosetTable table;
    table.generator_count = p.generator_count();
    table.entries = j.at("table").get<std::vector<std::int32_t>>();
    if (table.index() != static_cast<std::size_t>(*out.index)) return std::nullopt;
    out.table = std::move(table);
    return out;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void CertificateCache::store(const fpgroup::Presentation& p, const fpgroup::EnumerationConfig& config,
                             const fpgroup::EnumerationOutcome& outcome) const {
  if (!outcome.completed()) return;
  nlohmann::json j = {
      {"key", key_text(p, config)},
      {"bounds", {{"max_cosets", config.bounds.max_cosets}, {"max_definitions", config.bounds.max_definitions}}},
      {"index", *outcome.index},
      {"cosets_defined", outcome.cosets_defined},
      {"max_live_cosets", outcome.max_live_cosets},
      {"table", outcome.table ? outcome.table->entries : std::vector<std::int32_t>{}}};
  const auto path = entry_path(p, config);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << "\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

fpgroup::EnumerationOutcome CertificateCache::enumerate(const fpgroup::Presentation& p,
                                                        const fpgroup::EnumerationConfig& config) const {
  if (auto hit = lookup(p, config)) return *hit;
  auto outcome = fpgroup::coset_enumerate(p, {}, config);
  store(p, config, outcome);
  return outcome;
}

}  // namespace fourcalc::cli
