#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "fourcalc/fpgroup/coset_enumeration.hpp"

namespace fourcalc::cli {

// Completed trivial-subgroup enumerations on disk, one JSON file per
// presentation + strategy. Entries only hit under identical bounds.
class CertificateCache {
 public:
  explicit CertificateCache(std::filesystem::path dir);

  std::optional<fpgroup::EnumerationOutcome> lookup(const fpgroup::Presentation& p,
                                                    const fpgroup::EnumerationConfig& config) const;
  void store(const fpgroup::Presentation& p, const fpgroup::EnumerationConfig& config,
             const fpgroup::EnumerationOutcome& outcome) const;

  // Enumerates through the cache.
  fpgroup::EnumerationOutcome enumerate(const fpgroup::Presentation& p, const fpgroup::EnumerationConfig& config) const;

  std::filesystem::path entry_path(const fpgroup::Presentation& p, const fpgroup::EnumerationConfig& config) const;

 private:
  std::filesystem::path dir_;
};

// 64-bit FNV-1a.
std::uint64_t content_hash(std::string_view text);

}  // namespace fourcalc::cli
