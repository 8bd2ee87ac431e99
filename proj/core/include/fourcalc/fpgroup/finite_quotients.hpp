#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fourcalc/fpgroup/presentation.hpp"

namespace fourcalc::fpgroup {

// A small finite group given by its Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  // Closure of the given permutations (images of 0..degree-1).
  static FiniteGroup from_permutations(std::string id,
                                       const std::vector<std::vector<std::uint32_t>>& generators);

  const std::string& id() const { return id_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(inverse_.size()); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order() + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }

  // Order of the subgroup generated by `elements`.
  std::uint32_t generated_order(const std::vector<std::uint32_t>& elements) const;

 private:
  std::string id_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

constexpr std::uint32_t kDefaultQuotientCeiling = 16;

// Cyclic Z/k (2 <= k), dihedral D_{2m} (m >= 2), generalized quaternion Q8,
// Q16 and symmetric S3 -- every member of order <= max_order.
std::vector<FiniteGroup> quotient_library(std::uint32_t max_order);

struct Epimorphism {
  std::string group_id;
  std::uint32_t group_order = 0;
  std::vector<std::uint32_t> images;  // element index per generator
};

struct QuotientScanOptions {
  std::uint32_t max_order = 8;
  std::uint32_t ceiling = kDefaultQuotientCeiling;
  std::size_t max_results = static_cast<std::size_t>(-1);
};

// All surjections onto library groups of order <= max_order (up to
// max_results). Throws InputError when max_order exceeds the ceiling.
std::vector<Epimorphism> finite_quotient_scan(const Presentation& p,
                                              const QuotientScanOptions& options = {});

}  // namespace fourcalc::fpgroup
