#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fourcalc/fpgroup/presentation.hpp"

namespace fourcalc::fpgroup {

enum class Strategy {
  kHlt,     // relator-based (Haselgrove-Leech-Trotter), with lookahead when full
  kFelsch,  // definition-based, full deduction processing
};

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

struct EnumerationBounds {
  std::int64_t max_cosets = 1'000'000;
  std::int64_t max_definitions = 10'000'000;
};

struct EnumerationConfig {
  EnumerationBounds bounds;
  Strategy strategy = Strategy::kHlt;
  bool lookahead = true;  // HLT only
};

// Closed coset table: row c, column 2g is c*g, column 2g+1 is c*g^-1.
// Row 0 is the coset of the subgroup itself.
struct CosetTable {
  std::uint32_t generator_count = 0;
  std::vector<std::int32_t> entries;

  std::size_t index() const {
    return generator_count == 0 ? 1 : entries.size() / (2 * generator_count);
  }
  std::int32_t act(std::size_t coset, Letter l) const {
    return entries[coset * 2 * generator_count + l.column()];
  }
  friend bool operator==(const CosetTable&, const CosetTable&) = default;
};

struct EnumerationOutcome {
  // Set iff the enumeration completed; then it is the exact subgroup index.
  std::optional<std::int64_t> index;
  std::int64_t cosets_defined = 0;
  std::int64_t max_live_cosets = 0;
  std::optional<CosetTable> table;

  bool completed() const { return index.has_value(); }
  bool bound_exceeded() const { return !index.has_value(); }
};

// Deterministic for identical inputs and config. Always terminates; hitting
// a bound is reported in the outcome, not thrown. Throws InputError for
// non-positive bounds or subgroup words outside the generator range.
EnumerationOutcome coset_enumerate(const Presentation& p, std::span<const Word> subgroup_gens,
                                   const EnumerationConfig& config = {});

}  // namespace fourcalc::fpgroup
