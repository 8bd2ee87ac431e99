#include "fourcalc/fpgroup/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "fourcalc/errors.hpp"

namespace fourcalc::fpgroup {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  [[noreturn]] void fail(const std::string& message) const {
    std::ostringstream os;
    os << "parse error at column " << (offset_ + pos_ + 1) << ": " << message;
    throw InputError(os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) == kw) {
      const std::size_t end = pos_ + kw.size();
      if (end == text_.size() || !is_ident_char(text_[end])) {
        pos_ = end;
        return true;
      }
    }
    return false;
  }

  std::string identifier() {
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t value = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("expected integer exponent");
    }
    if (value > 100000 || value < -100000) {
      pos_ = start;
      fail("exponent out of range");
    }
    return value;
  }

  Word product(std::span<const std::string> names) {
    Word w = power(names);
    while (accept('*')) w *= power(names);
    return w;
  }

  Word power(std::span<const std::string> names) {
    Word base = atom(names);
    if (accept('^')) base = base.pow(integer());
    return base;
  }

  Word atom(std::span<const std::string> names) {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = product(names);
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = product(names);
      expect(',');
      Word y = product(names);
      expect(']');
      return commutator(x, y);
    }
    if (c == '1') {
      ++pos_;
      return Word{};
    }
    const std::size_t start = pos_;
    const std::string name = identifier();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    return Word::generator(static_cast<std::uint32_t>(it - names.begin()));
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : generator_names_(std::move(generator_names)) {
  std::set<std::string_view> seen;
  for (const auto& name : generator_names_) {
    if (!valid_identifier(name)) throw InputError("invalid generator name '" + name + "'");
    if (!seen.insert(name).second) throw InputError("duplicate generator name '" + name + "'");
  }
  relators_.reserve(relators.size());
  for (const auto& r : relators) {
    if (r.generator_bound() > generator_count()) {
      throw InputError("relator uses a generator index outside the presentation");
    }
    relators_.push_back(cyclic_reduce(r));
  }
}

std::optional<std::uint32_t> Presentation::generator_index(std::string_view name) const {
  const auto it = std::find(generator_names_.begin(), generator_names_.end(), name);
  if (it == generator_names_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - generator_names_.begin());
}

Word Presentation::word(std::string_view text) const { return parse_word(text, generator_names_); }

Presentation Presentation::with_relators(std::span<const Word> extra) const {
  std::vector<Word> rels = relators_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(generator_names_, std::move(rels));
}

Presentation Presentation::with_relator_order(std::span<const std::size_t> permutation) const {
  if (permutation.size() != relators_.size()) throw InputError("relator permutation has wrong size");
  std::vector<Word> rels;
  rels.reserve(relators_.size());
  std::vector<bool> used(relators_.size(), false);
  for (std::size_t i : permutation) {
    if (i >= relators_.size() || used[i]) throw InputError("not a permutation of relators");
    used[i] = true;
    rels.push_back(relators_[i]);
  }
  return Presentation(generator_names_, std::move(rels));
}

Word parse_word(std::string_view text, std::span<const std::string> names) {
  Parser parser(text);
  Word w = parser.product(names);
  if (!parser.at_end()) parser.fail("trailing characters after word");
  return w;
}

Presentation parse_presentation(std::string_view text) {
  Parser parser(text);
  if (!parser.accept_keyword("gens")) parser.fail("expected 'gens:'");
  parser.expect(':');
  std::vector<std::string> names;
  while (parser.peek() != ';') {
    if (parser.at_end()) parser.fail("expected ';' after generator list");
    names.push_back(parser.identifier());
    parser.accept(',');
  }
  parser.expect(';');
  {
    std::set<std::string_view> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) parser.fail("duplicate generator name '" + n + "'");
    }
  }
  if (!parser.accept_keyword("rels")) parser.fail("expected 'rels:'");
  parser.expect(':');
  std::vector<Word> relators;
  while (!parser.at_end() && parser.peek() != ';') {
    relators.push_back(parser.product(names));
    parser.accept(',');
  }
  parser.accept(';');
  if (!parser.at_end()) parser.fail("trailing characters after relators");
  return Presentation(std::move(names), std::move(relators));
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    if (!first) os << '*';
    first = false;
    os << names[w[i].generator()];
    const std::int64_t exponent = w[i].is_inverse() ? -run : run;
    if (exponent != 1) os << '^' << exponent;
    i = j;
  }
  return os.str();
}

std::string to_string(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& n : p.generator_names()) os << ' ' << n;
  os << "; rels:";
  for (const auto& r : p.relators()) os << ' ' << format_word(r, p.generator_names());
  return os.str();
}

}  // namespace fourcalc::fpgroup
