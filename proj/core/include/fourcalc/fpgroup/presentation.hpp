#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fourcalc/fpgroup/word.hpp"

namespace fourcalc::fpgroup {

// Generators plus relators of a finitely presented group. Relators are
// stored freely and cyclically reduced, in the order supplied.
class Presentation {
 public:
  Presentation() = default;

  // Throws InputError on duplicate/invalid names or out-of-range letters.
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  std::uint32_t generator_count() const {
    return static_cast<std::uint32_t>(generator_names_.size());
  }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::optional<std::uint32_t> generator_index(std::string_view name) const;

  // Parses a word written over this presentation's generator names.
  Word word(std::string_view text) const;

  Presentation with_relators(std::span<const Word> extra) const;
  Presentation with_relator_order(std::span<const std::size_t> permutation) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generator_names_;
  std::vector<Word> relators_;
};

// Text format:
//   gens: a b c; rels: [a,b] a^3 (a*b)^-2
// Identifiers, `^` integer powers (negative for inverses), `*` concatenation,
// `[x,y]` for x*y*x^-1*y^-1, `1` for the empty word. Relators are separated
// by whitespace (or commas). Errors carry a 1-based column.
Presentation parse_presentation(std::string_view text);

// Canonical rendering; parse_presentation(to_string(p)) == p.
std::string to_string(const Presentation& p);

std::string format_word(const Word& w, std::span<const std::string> names);
Word parse_word(std::string_view text, std::span<const std::string> names);

}  // namespace fourcalc::fpgroup
