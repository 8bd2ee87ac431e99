#include "fourcalc/fpgroup/word.hpp"

#include <algorithm>

namespace fourcalc::fpgroup {

std::uint32_t Word::generator_bound() const {
  std::uint32_t bound = 0;
  for (Letter l : letters_) bound = std::max(bound, l.generator() + 1);
  return bound;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::pow(std::int64_t exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  const std::int64_t count = exponent < 0 ? -exponent : exponent;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.insert(out.end(), base.begin(), base.end());
  return Word(std::move(out));
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(const Word& w) {
  const Word reduced = free_reduce(w);
  const auto letters = reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                  letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverse()) return false;
  }
  return true;
}

}  // namespace fourcalc::fpgroup
