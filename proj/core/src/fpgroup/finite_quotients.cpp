#include "fourcalc/fpgroup/finite_quotients.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fourcalc/errors.hpp"

namespace fourcalc::fpgroup {
namespace {

using Perm = std::vector<std::uint32_t>;

Perm compose(const Perm& a, const Perm& b) {
  // apply a, then b
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm cycle(std::uint32_t n) {
  Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

Perm reflection(std::uint32_t n) {
  Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = (n - i) % n;
  return p;
}

// Left-regular permutations of the generalized quaternion group of order
// 4m = 2^k, elements a^i b^j (0 <= i < 2m, j in {0,1}), a^{2m}=1,
// b^2=a^m, b a b^-1 = a^-1.
std::vector<Perm> quaternion_generators(std::uint32_t m) {
  const std::uint32_t n = 2 * m;
  auto index = [n](std::uint32_t i, std::uint32_t j) { return j * n + (i % n); };
  Perm a(2 * n), b(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    // a * a^i b^j = a^{i+1} b^j
    a[index(i, 0)] = index(i + 1, 0);
    a[index(i, 1)] = index(i + 1, 1);
    // b * a^i = a^{-i} b ; b * a^i b = a^{-i} b^2 = a^{m-i}
    b[index(i, 0)] = index(n - i, 1);
    b[index(i, 1)] = index(m + n - i, 0);
  }
  return {a, b};
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(std::string id, const std::vector<Perm>& generators) {
  FiniteGroup g;
  g.id_ = std::move(id);
  const std::size_t degree = generators.empty() ? 1 : generators.front().size();
  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0U);
  std::vector<Perm> elements{identity};
  std::map<Perm, std::uint32_t> index{{identity, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& s : generators) {
      Perm next = compose(elements[i], s);
      if (index.emplace(next, static_cast<std::uint32_t>(elements.size())).second) elements.push_back(std::move(next));
    }
  const auto n = static_cast<std::uint32_t>(elements.size());
  g.table_.resize(static_cast<std::size_t>(n) * n);
  g.inverse_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t c = index.at(compose(elements[a], elements[b]));
      g.table_[a * n + b] = c;
      if (c == 0) g.inverse_[a] = b;
    }
  return g;
}

std::uint32_t FiniteGroup::generated_order(const std::vector<std::uint32_t>& elements) const {
  std::vector<bool> seen(order(), false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::uint32_t s : elements) {
      const std::uint32_t next = mul(queue[i], s);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  return static_cast<std::uint32_t>(queue.size());
}

std::vector<FiniteGroup> quotient_library(std::uint32_t max_order) {
  std::vector<FiniteGroup> out;
  for (std::uint32_t k = 2; k <= max_order; ++k)
    out.push_back(FiniteGroup::from_permutations("Z/" + std::to_string(k), {cycle(k)}));
  for (std::uint32_t m = 2; 2 * m <= max_order; ++m) {
    // D_4 on two points would collapse; act on 2m points with the
    // regular-like realization r, s for m == 2 via the Klein group.
    if (m == 2) {
      out.push_back(FiniteGroup::from_permutations("D4", {{1, 0, 3, 2}, {2, 3, 0, 1}}));
      continue;
    }
    out.push_back(FiniteGroup::from_permutations("D" + std::to_string(2 * m), {cycle(m), reflection(m)}));
  }
  for (std::uint32_t order = 8; order <= max_order; order *= 2)
    out.push_back(FiniteGroup::from_permutations("Q" + std::to_string(order), quaternion_generators(order / 4)));
  if (max_order >= 6) out.push_back(FiniteGroup::from_permutations("S3", {{1, 0, 2}, {1, 2, 0}}));
  return out;
}

namespace {

class HomSearch {
 public:
  HomSearch(const Presentation& p, const FiniteGroup& g, std::size_t limit, std::vector<Epimorphism>& out)
      : p_(p), g_(g), limit_(limit), out_(out), images_(p.generator_count(), kUnset) {
    for (const auto& r : p.relators()) {
      if (!r.empty()) relators_.push_back(&r);
    }
    occurrences_.assign(p.generator_count(), 0);
    for (const auto* r : relators_)
      for (Letter l : *r) ++occurrences_[l.generator()];
  }

  void run() { search(); }

 private:
  static constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

  std::uint32_t image(Letter l) const {
    const std::uint32_t e = images_[l.generator()];
    return l.is_inverse() ? g_.inv(e) : e;
  }

  // Returns false on a violated relator. Solves relators in which a single
  // unassigned generator occurs exactly once.
  bool propagate(std::vector<std::uint32_t>& assigned) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Word* r : relators_) {
        std::uint32_t unknown = kUnset;
        std::size_t count = 0;
        std::size_t position = 0;
        for (std::size_t i = 0; i < r->size(); ++i) {
          const Letter l = (*r)[i];
          if (images_[l.generator()] != kUnset) continue;
          if (unknown == kUnset || unknown == l.generator()) {
            unknown = l.generator();
            ++count;
            position = i;
          } else {
            count = 2;  // two distinct unknowns
            break;
          }
        }
        if (unknown == kUnset) {
          std::uint32_t acc = 0;
          for (Letter l : *r) acc = g_.mul(acc, image(l));
          if (acc != 0) return false;
          continue;
        }
        if (count != 1) continue;
        // prefix * x^e * suffix = 1  =>  x^e = prefix^-1 * suffix^-1
        std::uint32_t prefix = 0;
        for (std::size_t i = 0; i < position; ++i) prefix = g_.mul(prefix, image((*r)[i]));
        std::uint32_t suffix = 0;
        for (std::size_t i = position + 1; i < r->size(); ++i) suffix = g_.mul(suffix, image((*r)[i]));
        std::uint32_t value = g_.mul(g_.inv(prefix), g_.inv(suffix));
        if ((*r)[position].is_inverse()) value = g_.inv(value);
        images_[unknown] = value;
        assigned.push_back(unknown);
        changed = true;
      }
    }
    return true;
  }

  void search() {
    if (out_.size() >= limit_) return;
    std::vector<std::uint32_t> assigned;
    if (!propagate(assigned)) {
      for (std::uint32_t g : assigned) images_[g] = kUnset;
      return;
    }
    // Branch on the unassigned generator with the most relator occurrences.
    std::uint32_t next = kUnset;
    for (std::uint32_t g = 0; g < images_.size(); ++g)
      if (images_[g] == kUnset && (next == kUnset || occurrences_[g] > occurrences_[next])) next = g;
    if (next == kUnset) {
      if (g_.generated_order(images_) == g_.order()) out_.push_back({g_.id(), g_.order(), images_});
    } else {
      for (std::uint32_t e = 0; e < g_.order() && out_.size() < limit_; ++e) {
        images_[next] = e;
        search();
      }
      images_[next] = kUnset;
    }
    for (std::uint32_t g : assigned) images_[g] = kUnset;
  }

  const Presentation& p_;
  const FiniteGroup& g_;
  std::size_t limit_;
  std::vector<Epimorphism>& out_;
  std::vector<std::uint32_t> images_;
  std::vector<const Word*> relators_;
  std::vector<std::size_t> occurrences_;
};

}  // namespace

std::vector<Epimorphism> finite_quotient_scan(const Presentation& p, const QuotientScanOptions& options) {
  if (options.max_order > options.ceiling) {
    throw InputError("finite_quotient_scan: max_order " + std::to_string(options.max_order) +
                     " exceeds the ceiling " + std::to_string(options.ceiling));
  }
  std::vector<Epimorphism> out;
  for (const auto& g : quotient_library(options.max_order)) {
    if (out.size() >= options.max_results) break;
    HomSearch(p, g, options.max_results, out).run();
  }
  return out;
}

}  // namespace fourcalc::fpgroup
