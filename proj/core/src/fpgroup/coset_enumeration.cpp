#include "fourcalc/fpgroup/coset_enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "fourcalc/errors.hpp"

namespace fourcalc::fpgroup {

std::string_view to_string(Strategy s) { return s == Strategy::kHlt ? "hlt" : "felsch"; }

std::optional<Strategy> parse_strategy(std::string_view s) {
  if (s == "hlt") return Strategy::kHlt;
  if (s == "felsch") return Strategy::kFelsch;
  return std::nullopt;
}

namespace {

constexpr std::int32_t kUndefined = -1;

using Columns = std::vector<std::int32_t>;

std::int32_t inverse_column(std::int32_t c) { return c ^ 1; }

Columns to_columns(const Word& w) {
  Columns out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(static_cast<std::int32_t>(l.column()));
  return out;
}

// Thrown internally when a definition needs a row that is not available.
struct NoSpace {};
struct DefinitionLimit {};

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::span<const Word> subgroup, const EnumerationConfig& cfg)
      : config_(cfg), ncols_(2 * static_cast<std::size_t>(p.generator_count())) {
    for (const auto& r : p.relators())
      if (!r.empty()) relators_.push_back(to_columns(r));
    for (const auto& h : subgroup) {
      const Word reduced = free_reduce(h);
      if (!reduced.empty()) subgroup_.push_back(to_columns(reduced));
    }
    if (config_.strategy == Strategy::kFelsch) build_conjugates();
    add_row();
    live_ = 1;
    max_live_ = 1;
    defined_ = 1;
  }

  EnumerationOutcome run() {
    EnumerationOutcome out;
    bool done = false;
    try {
      done = config_.strategy == Strategy::kHlt ? run_hlt() : run_felsch();
    } catch (const DefinitionLimit&) {
      done = false;
    }
    out.cosets_defined = defined_;
    out.max_live_cosets = max_live_;
    if (done) {
      compact(0);
      verify_closed();
      out.index = live_;
      CosetTable table;
      table.generator_count = static_cast<std::uint32_t>(ncols_ / 2);
      table.entries = table_;
      out.table = std::move(table);
    }
    return out;
  }

 private:
  // ---- table primitives -------------------------------------------------

  std::size_t rows() const { return parent_.size(); }
  std::int32_t& at(std::int32_t coset, std::int32_t col) {
    return table_[static_cast<std::size_t>(coset) * ncols_ + static_cast<std::size_t>(col)];
  }
  bool live(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  void add_row() {
    parent_.push_back(static_cast<std::int32_t>(parent_.size()));
    table_.resize(table_.size() + ncols_, kUndefined);
  }

  void set(std::int32_t coset, std::int32_t col, std::int32_t target) {
    at(coset, col) = target;
    at(target, inverse_column(col)) = coset;
    if (config_.strategy == Strategy::kFelsch) deductions_.emplace_back(coset, col);
  }

  void define(std::int32_t coset, std::int32_t col) {
    if (static_cast<std::int64_t>(rows()) >= config_.bounds.max_cosets) throw NoSpace{};
    if (defined_ >= config_.bounds.max_definitions) throw DefinitionLimit{};
    add_row();
    ++defined_;
    ++live_;
    max_live_ = std::max(max_live_, live_);
    set(coset, col, static_cast<std::int32_t>(rows() - 1));
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(std::int32_t a, std::int32_t b) {
    const std::int32_t ra = rep(a);
    const std::int32_t rb = rep(b);
    if (ra == rb) return;
    const std::int32_t lo = std::min(ra, rb);
    const std::int32_t hi = std::max(ra, rb);
    parent_[static_cast<std::size_t>(hi)] = lo;
    --live_;
    queue_.push_back(hi);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::int32_t gamma = queue_[qi];
      for (std::int32_t x = 0; x < static_cast<std::int32_t>(ncols_); ++x) {
        const std::int32_t delta = at(gamma, x);
        if (delta == kUndefined) continue;
        at(delta, inverse_column(x)) = kUndefined;
        const std::int32_t mu = rep(gamma);
        const std::int32_t nu = rep(delta);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x));
        } else if (at(nu, inverse_column(x)) != kUndefined) {
          merge(mu, at(nu, inverse_column(x)));
        } else {
          set(mu, x, nu);
        }
      }
    }
    queue_.clear();
  }

  // Traces w from `coset` in both directions; fills a single gap as a
  // deduction, records a coincidence on mismatch, and (when `fill` is set)
  // defines new cosets to close the remaining gap.
  void scan(std::int32_t coset, const Columns& w, bool fill) {
    if (w.empty()) return;
    std::int32_t f = coset;
    std::int32_t b = coset;
    std::size_t i = 0;
    std::size_t j = w.size();  // exclusive
    for (;;) {
      while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inverse_column(w[j - 1])) != kUndefined) {
        b = at(b, inverse_column(w[j - 1]));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  // Renumbers live cosets in order. Returns the new index of the first live
  // coset at or after `cursor`.
  std::int32_t compact(std::int32_t cursor) {
    std::vector<std::int32_t> remap(rows(), kUndefined);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < rows(); ++c)
      if (parent_[c] == static_cast<std::int32_t>(c)) remap[c] = next++;
    std::int32_t new_cursor = next;
    for (std::size_t c = static_cast<std::size_t>(std::max(cursor, 0)); c < rows(); ++c)
      if (remap[c] != kUndefined) {
        new_cursor = remap[c];
        break;
      }
    std::vector<std::int32_t> table(static_cast<std::size_t>(next) * ncols_, kUndefined);
    for (std::size_t c = 0; c < rows(); ++c) {
      if (remap[c] == kUndefined) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t e = table_[c * ncols_ + x];
        if (e == kUndefined) continue;
        assert(remap[static_cast<std::size_t>(e)] != kUndefined);
        table[static_cast<std::size_t>(remap[c]) * ncols_ + x] = remap[static_cast<std::size_t>(e)];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (std::int32_t c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    for (auto& d : deductions_) d.first = d.first < static_cast<std::int32_t>(remap.size()) ? remap[static_cast<std::size_t>(d.first)] : kUndefined;
    std::erase_if(deductions_, [](const auto& d) { return d.first == kUndefined; });
    return new_cursor;
  }

  bool full() const { return static_cast<std::int64_t>(rows()) >= config_.bounds.max_cosets; }

  // Reclaims rows; returns the remapped cursor or nullopt if no room remains.
  std::optional<std::int32_t> make_room(std::int32_t cursor) {
    if (static_cast<std::int64_t>(rows()) > live_) cursor = compact(cursor);
    if (!full()) return cursor;
    if (config_.strategy != Strategy::kHlt || !config_.lookahead) return std::nullopt;
    for (std::int32_t beta = cursor; beta < static_cast<std::int32_t>(rows()); ++beta) {
      if (beta == 0)
        for (const auto& h : subgroup_) scan(0, h, false);
      for (const auto& w : relators_) {
        if (!live(beta)) break;
        scan(beta, w, false);
      }
    }
    cursor = compact(cursor);
    if (full()) return std::nullopt;
    return cursor;
  }

  // Every coset has every column defined, every relator closes at every
  // coset and every subgroup generator closes at coset 0.
  void verify_closed() {
    const auto n = static_cast<std::int32_t>(rows());
    for (std::int32_t c = 0; c < n; ++c)
      for (std::int32_t x = 0; x < static_cast<std::int32_t>(ncols_); ++x) {
        const std::int32_t e = at(c, x);
        if (e == kUndefined || at(e, inverse_column(x)) != c) {
          throw std::logic_error("coset enumeration produced an inconsistent table");
        }
      }
    auto closes = [&](std::int32_t c, const Columns& w) {
      std::int32_t f = c;
      for (std::int32_t x : w) f = at(f, x);
      return f == c;
    };
    for (std::int32_t c = 0; c < n; ++c)
      for (const auto& w : relators_)
        if (!closes(c, w)) throw std::logic_error("coset table does not satisfy a relator");
    for (const auto& h : subgroup_)
      if (!closes(0, h)) throw std::logic_error("coset table does not fix the subgroup");
  }

  // ---- HLT ---------------------------------------------------------------

  bool run_hlt() {
    std::int32_t alpha = 0;
    while (alpha < static_cast<std::int32_t>(rows())) {
      if (!live(alpha)) {
        ++alpha;
        continue;
      }
      try {
        if (alpha == 0)
          for (const auto& h : subgroup_) scan(0, h, true);
        for (const auto& w : relators_) {
          if (!live(alpha)) break;
          scan(alpha, w, true);
        }
        if (live(alpha))
          for (std::int32_t x = 0; x < static_cast<std::int32_t>(ncols_); ++x)
            if (at(alpha, x) == kUndefined) define(alpha, x);
      } catch (const NoSpace&) {
        const auto cursor = make_room(alpha);
        if (!cursor) return false;
        alpha = *cursor;
        continue;  // rescan from the (remapped) cursor; scans are idempotent
      }
      ++alpha;
    }
    return true;
  }

  // ---- Felsch ------------------------------------------------------------

  void build_conjugates() {
    conjugates_.assign(ncols_, {});
    std::vector<Columns> words = relators_;
    for (const auto& r : relators_) {
      Columns inv(r.rbegin(), r.rend());
      for (auto& c : inv) c = inverse_column(c);
      words.push_back(std::move(inv));
    }
    for (const auto& w : words)
      for (std::size_t s = 0; s < w.size(); ++s) {
        Columns rotated(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
        rotated.insert(rotated.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
        auto& bucket = conjugates_[static_cast<std::size_t>(rotated.front())];
        if (std::find(bucket.begin(), bucket.end(), rotated) == bucket.end()) bucket.push_back(std::move(rotated));
      }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [coset, col] = deductions_.back();
      deductions_.pop_back();
      if (coset == kUndefined || coset >= static_cast<std::int32_t>(rows()) || !live(coset)) continue;
      for (const auto& w : conjugates_[static_cast<std::size_t>(col)]) {
        if (!live(coset)) break;
        scan(coset, w, false);
      }
      if (!live(coset)) continue;
      const std::int32_t target = at(coset, col);
      if (target == kUndefined || !live(target)) continue;
      for (const auto& w : conjugates_[static_cast<std::size_t>(inverse_column(col))]) {
        if (!live(target)) break;
        scan(target, w, false);
      }
    }
  }

  std::int32_t first_incomplete() {
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(rows()); ++c) {
      if (!live(c)) continue;
      for (std::int32_t x = 0; x < static_cast<std::int32_t>(ncols_); ++x)
        if (at(c, x) == kUndefined) return c;
    }
    return static_cast<std::int32_t>(rows());
  }

  bool run_felsch() {
    for (;;) {
      try {
        for (const auto& h : subgroup_) scan(0, h, true);
        break;
      } catch (const NoSpace&) {
        if (!make_room(0)) return false;
      }
    }
    process_deductions();
    std::int32_t cursor = 0;
    for (;;) {
      while (cursor < static_cast<std::int32_t>(rows())) {
        if (live(cursor)) {
          bool gap = false;
          for (std::int32_t x = 0; x < static_cast<std::int32_t>(ncols_); ++x)
            if (at(cursor, x) == kUndefined) {
              gap = true;
              break;
            }
          if (gap) break;
        }
        ++cursor;
      }
      if (cursor >= static_cast<std::int32_t>(rows())) {
        cursor = first_incomplete();
        if (cursor >= static_cast<std::int32_t>(rows())) return true;
      }
      std::int32_t col = 0;
      while (at(cursor, col) != kUndefined) ++col;
      try {
        define(cursor, col);
      } catch (const NoSpace&) {
        const auto c = make_room(cursor);
        if (!c) return false;
        cursor = *c;
        continue;
      }
      process_deductions();
      // Coincidences can only lower the first incomplete coset below the
      // cursor by merging into earlier rows, which are complete already.
    }
  }

  EnumerationConfig config_;
  std::size_t ncols_;
  std::vector<Columns> relators_;
  std::vector<Columns> subgroup_;
  std::vector<std::vector<Columns>> conjugates_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
  std::vector<std::pair<std::int32_t, std::int32_t>> deductions_;
  std::int64_t live_ = 0;
  std::int64_t max_live_ = 0;
  std::int64_t defined_ = 0;
};

}  // namespace

EnumerationOutcome coset_enumerate(const Presentation& p, std::span<const Word> subgroup_gens,
                                   const EnumerationConfig& config) {
  if (config.bounds.max_cosets <= 0 || config.bounds.max_definitions <= 0) {
    throw InputError("enumeration bounds must be positive");
  }
  if (config.bounds.max_cosets > (std::int64_t{1} << 30)) {
    throw InputError("max_cosets exceeds the supported table size (2^30)");
  }
  for (const auto& h : subgroup_gens) {
    if (h.generator_bound() > p.generator_count()) {
      throw InputError("subgroup generator uses a generator index outside the presentation");
    }
  }
  if (p.generator_count() == 0) {
    EnumerationOutcome out;
    out.index = 1;
    out.cosets_defined = 1;
    out.max_live_cosets = 1;
    out.table = CosetTable{};
    return out;
  }
  return Enumerator(p, subgroup_gens, config).run();
}

}  // namespace fourcalc::fpgroup
