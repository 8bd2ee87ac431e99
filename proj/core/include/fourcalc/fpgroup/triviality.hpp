#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fourcalc/fpgroup/abelianization.hpp"
#include "fourcalc/fpgroup/coset_enumeration.hpp"
#include "fourcalc/fpgroup/finite_quotients.hpp"

namespace fourcalc::fpgroup {

enum class Verdict { kTrivial, kNontrivial, kUnknown };

std::string_view to_string(Verdict v);

struct NontrivialityWitness {
  enum class Kind { kAbelianization, kFiniteQuotient, kFiniteOrder };
  Kind kind = Kind::kAbelianization;
  std::optional<AbelianInvariants> abelian;
  std::optional<Epimorphism> quotient;
  std::optional<std::int64_t> order;  // the group itself is finite of this order

  std::string describe() const;
};

struct TrivialityResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<NontrivialityWitness> witness;
  EnumerationOutcome enumeration;

  std::string describe() const;
};

struct TrivialityConfig {
  EnumerationConfig enumeration;
  std::uint32_t quotient_max_order = kDefaultQuotientCeiling;
};

// Stand-in for coset_enumerate with the trivial subgroup (e.g. a cache).
using TrivialEnumerator = std::function<EnumerationOutcome(const Presentation&, const EnumerationConfig&)>;

TrivialityResult is_trivial(const Presentation& p, const TrivialityConfig& config = {},
                            const TrivialEnumerator& enumerate = {});

}  // namespace fourcalc::fpgroup
