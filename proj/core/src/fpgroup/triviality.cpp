#include "fourcalc/fpgroup/triviality.hpp"

#include <sstream>

namespace fourcalc::fpgroup {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrivial: return "Trivial";
    case Verdict::kNontrivial: return "Nontrivial";
    case Verdict::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::string NontrivialityWitness::describe() const {
  switch (kind) {
    case Kind::kAbelianization: return "abelianization " + to_string(*abelian);
    case Kind::kFiniteQuotient: return "surjection onto " + quotient->group_id;
    case Kind::kFiniteOrder: return "finite of order " + std::to_string(*order);
  }
  return {};
}

std::string TrivialityResult::describe() const {
  std::string out(to_string(verdict));
  if (witness) out += "(" + witness->describe() + ")";
  return out;
}

TrivialityResult is_trivial(const Presentation& p, const TrivialityConfig& config,
                            const TrivialEnumerator& enumerate) {
  TrivialityResult result;
  const AbelianInvariants ab = abelianization(p);
  if (!ab.is_trivial()) {
    result.verdict = Verdict::kNontrivial;
    result.witness = NontrivialityWitness{NontrivialityWitness::Kind::kAbelianization, ab, {}, {}};
    return result;
  }
  result.enumeration = enumerate ? enumerate(p, config.enumeration) : coset_enumerate(p, {}, config.enumeration);
  if (result.enumeration.completed()) {
    const std::int64_t order = *result.enumeration.index;
    if (order == 1) {
      result.verdict = Verdict::kTrivial;
    } else {
      result.verdict = Verdict::kNontrivial;
      result.witness = NontrivialityWitness{NontrivialityWitness::Kind::kFiniteOrder, {}, {}, order};
    }
    return result;
  }
  QuotientScanOptions options;
  options.max_order = config.quotient_max_order;
  options.max_results = 1;
  auto quotients = finite_quotient_scan(p, options);
  if (!quotients.empty()) {
    result.verdict = Verdict::kNontrivial;
    result.witness = NontrivialityWitness{NontrivialityWitness::Kind::kFiniteQuotient, {}, quotients.front(), {}};
  }
  return result;
}

}  // namespace fourcalc::fpgroup
