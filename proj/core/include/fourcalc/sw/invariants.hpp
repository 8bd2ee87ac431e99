#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fourcalc/sw/state.hpp"

namespace fourcalc::sw {

// Largest number of classes blowup_sw will materialize.
constexpr std::uint64_t kMaxBlowupClasses = 1ULL << 16;

// Adds `count` exceptional classes of square -1; each K becomes the 2^count
// classes K +- E_1 +- ... +- E_count with the value of K.
// Throws ResourceError past kMaxBlowupClasses.
SWState blowup_sw(const SWState& s, std::int64_t count);

// Each value v spreads to {v-1, v, v+1}. Requires b2plus = 1.
std::map<LatticeVector, std::set<std::int64_t>> chamber_spread(const SWState& s);
// Spread of a class outside the support.
std::set<std::int64_t> chamber_spread_absent();
// Union of all spread sets, including one absent class.
std::set<std::int64_t> chamber_value_union(const SWState& s);
// The union blowup_sw(s, count) would have, without materializing it.
std::set<std::int64_t> chamber_value_union_after_blowup(const SWState& s, std::int64_t count);

// Nonempty support and (Ki - Kj)^2 != -4 for all pairs.
bool check_irreducible(const SWState& s);

// Sorted multiset of (|value|, K^2) over the support.
using Fingerprint = std::vector<std::pair<std::int64_t, std::int64_t>>;
Fingerprint sw_fingerprint(const SWState& s);

}  // namespace fourcalc::sw
