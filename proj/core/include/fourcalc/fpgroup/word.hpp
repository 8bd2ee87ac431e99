#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fourcalc::fpgroup {

// A letter is a generator index together with an exponent sign. It is
// packed as +(gen+1) for the generator and -(gen+1) for its inverse, so a
// word is a flat signed-index array and inversion is negation.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t generator, bool inverse)
      : code_(inverse ? -static_cast<std::int32_t>(generator + 1)
                      : static_cast<std::int32_t>(generator + 1)) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t generator() const {
    return static_cast<std::uint32_t>((code_ < 0 ? -code_ : code_) - 1);
  }
  constexpr bool is_inverse() const { return code_ < 0; }
  constexpr int sign() const { return code_ < 0 ? -1 : 1; }
  constexpr std::int32_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(-code_); }

  // Column index in a coset table: 2g for g, 2g+1 for g^-1.
  constexpr std::size_t column() const {
    return 2 * static_cast<std::size_t>(generator()) + (is_inverse() ? 1 : 0);
  }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::int32_t code_ = 1;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(std::uint32_t g) { return Word{Letter(g, false)}; }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Largest generator index used plus one (0 for the empty word).
  std::uint32_t generator_bound() const;

  Word inverse() const;
  Word pow(std::int64_t exponent) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);

// Unique freely reduced form; idempotent and never longer than the input.
Word free_reduce(const Word& w);

// Freely reduces, then strips matching inverse letters from both ends.
Word cyclic_reduce(const Word& w);

bool is_freely_reduced(const Word& w);

}  // namespace fourcalc::fpgroup
