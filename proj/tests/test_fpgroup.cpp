#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fourcalc/errors.hpp"
#include "fourcalc/fpgroup/abelianization.hpp"
#include "fourcalc/fpgroup/coset_enumeration.hpp"
#include "fourcalc/fpgroup/finite_quotients.hpp"
#include "fourcalc/fpgroup/presentation.hpp"
#include "fourcalc/fpgroup/triviality.hpp"
#include "fourcalc/fpgroup/word.hpp"
#include "oracles.hpp"

using namespace fourcalc;
using namespace fourcalc::fpgroup;

namespace {

Letter g(std::uint32_t i) { return Letter(i, false); }
Letter G(std::uint32_t i) { return Letter(i, true); }

Word random_word(std::mt19937_64& rng, std::uint32_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen(0, gens - 1);
  std::vector<Letter> letters;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) letters.emplace_back(gen(rng), rng() % 2 == 0);
  return Word(std::move(letters));
}

// Reference reduction: repeatedly delete the first adjacent cancelling pair.
Word naive_reduce(Word w) {
  std::vector<Letter> v(w.begin(), w.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i].inverse() == v[i + 1]) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return Word(v);
}

std::int64_t index_of(const Presentation& p, const std::vector<Word>& sub = {}, Strategy s = Strategy::kHlt) {
  EnumerationConfig c;
  c.strategy = s;
  const auto out = coset_enumerate(p, sub, c);
  REQUIRE(out.completed());
  return *out.index;
}

}  // namespace

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(Word{g(0), G(0)}).empty());
  CHECK(free_reduce(Word{g(0), g(1), G(1), g(0)}) == Word{g(0), g(0)});
  CHECK(free_reduce(Word{}).empty());
  CHECK(cyclic_reduce(Word{g(1), g(0), G(1)}) == Word{g(0)});
}

TEST_CASE("free_reduce agrees with naive cancellation on random words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(rng, 3, 24);
    const Word r = free_reduce(w);
    CHECK(r == naive_reduce(w));
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(w * w.inverse()).empty());
  }
}

TEST_CASE("presentation text round trip") {
  const auto p = parse_presentation("gens: a b c; rels: [a,b] a^3 (a*b)^-2 c*1");
  CHECK(p.generator_count() == 3);
  CHECK(p.relators().size() == 4);
  CHECK(parse_presentation(to_string(p)) == p);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: ["), InputError);
  CHECK_THROWS_AS(parse_presentation("gens: a a; rels: a"), InputError);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: b"), InputError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Word> rels;
    for (int r = 0; r < 3; ++r) rels.push_back(random_word(rng, 3, 10));
    const Presentation q({"x", "y", "z"}, rels);
    CHECK(parse_presentation(to_string(q)) == q);
  }
}

TEST_CASE("abelianization examples") {
  auto a = abelianization(parse_presentation("gens: a b; rels: [a,b]"));
  CHECK(a.free_rank == 2);
  CHECK(a.torsion_factors.empty());
  a = abelianization(parse_presentation("gens: a; rels: a^3"));
  CHECK(a.free_rank == 0);
  CHECK(a.torsion_factors == std::vector<std::int64_t>{3});
  a = abelianization(parse_presentation("gens: a b; rels: a^4*b^6 a^6*b^4"));
  CHECK(to_string(a) == "Z/2 + Z/10");
}

TEST_CASE("abelianization matches determinantal-divisor oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Word> rels;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int r = 0; r < count; ++r) rels.push_back(random_word(rng, 3, 8));
    const Presentation p({"a", "b", "c"}, rels);
    const auto [free_rank, factors] = oracle::abelian_invariants_by_minors(exponent_matrix(p));
    const auto got = abelianization(p);
    CHECK(got.free_rank == free_rank);
    CHECK(got.torsion_factors == factors);
  }
}

TEST_CASE("coset enumeration examples") {
  CHECK(index_of(parse_presentation("gens: a; rels: a^5")) == 5);
  const auto p = parse_presentation("gens: a b; rels: a^2 b^3 (a*b)^3");
  CHECK(index_of(p, {p.word("a")}) == 6);
  CHECK(index_of(p, {p.word("a")}, Strategy::kFelsch) == 6);
}

TEST_CASE("coset enumeration corpus matches permutation-group orders") {
  for (const auto& c : oracle::group_corpus()) {
    CAPTURE(c.name);
    const auto p = parse_presentation(c.presentation);
    REQUIRE(oracle::relators_hold(p, c.faithful));
    const auto order = static_cast<std::int64_t>(oracle::permutation_group_order(c.faithful));
    CHECK(index_of(p) == order);
    CHECK(index_of(p, {}, Strategy::kFelsch) == order);
    EnumerationConfig no_lookahead;
    no_lookahead.lookahead = false;
    CHECK(*coset_enumerate(p, {}, no_lookahead).index == order);
  }
}

TEST_CASE("cyclic family a^k") {
  for (int k = 1; k <= 50; ++k) {
    const auto p = parse_presentation("gens: a; rels: a^" + std::to_string(k));
    CHECK(index_of(p) == k);
    CHECK(index_of(p, {}, Strategy::kFelsch) == k);
  }
}

TEST_CASE("coset index is invariant under relator permutation and subgroup index is a divisor") {
  std::mt19937_64 rng(23);
  const auto corpus = oracle::group_corpus();
  int cases = 0;
  for (int round = 0; round < 60; ++round) {
    for (const auto& c : corpus) {
      const auto p = parse_presentation(c.presentation);
      std::vector<std::size_t> perm(p.relators().size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto q = p.with_relator_order(perm);
      const auto order = static_cast<std::int64_t>(oracle::permutation_group_order(c.faithful));
      const Strategy s = round % 2 == 0 ? Strategy::kHlt : Strategy::kFelsch;
      CHECK(index_of(q, {}, s) == order);
      const Word h = random_word(rng, p.generator_count(), 4);
      const auto sub_index = index_of(q, {h}, s);
      CHECK(order % sub_index == 0);
      ++cases;
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("coset tables are closed and deterministic") {
  const auto p = parse_presentation("gens: a b; rels: a^2 b^3 (a*b)^5");
  const auto first = coset_enumerate(p, {});
  const auto second = coset_enumerate(p, {});
  REQUIRE(first.table);
  CHECK(*first.table == *second.table);
  const auto& t = *first.table;
  CHECK(t.index() == 60);
  for (std::size_t c = 0; c < t.index(); ++c) {
    for (std::uint32_t gi = 0; gi < 2; ++gi) {
      const auto img = static_cast<std::size_t>(t.act(c, g(gi)));
      CHECK(static_cast<std::size_t>(t.act(img, G(gi))) == c);
    }
  }
}

TEST_CASE("coset enumeration reports bound exhaustion") {
  const auto p = parse_presentation("gens: a b; rels: a^2 b^3 (a*b)^7");
  EnumerationConfig c;
  c.bounds.max_cosets = 200;
  const auto out = coset_enumerate(p, {}, c);
  CHECK(out.bound_exceeded());
  CHECK_FALSE(out.table);
  c.bounds.max_cosets = 0;
  CHECK_THROWS_AS(coset_enumerate(p, {}, c), InputError);
}

TEST_CASE("is_trivial verdicts") {
  CHECK(is_trivial(parse_presentation("gens: a b; rels: a b")).verdict == Verdict::kTrivial);
  const auto z2 = is_trivial(parse_presentation("gens: a; rels: a^2"));
  CHECK(z2.verdict == Verdict::kNontrivial);
  CHECK(z2.describe() == "Nontrivial(abelianization Z/2)");
  const auto a5 = is_trivial(parse_presentation("gens: a b; rels: a^2 b^3 (a*b)^5"));
  CHECK(a5.verdict == Verdict::kNontrivial);
  REQUIRE(a5.witness);
  CHECK(a5.witness->order == 60);

  TrivialityConfig tight;
  tight.enumeration.bounds.max_cosets = 10;
  CHECK(is_trivial(parse_presentation("gens: a b; rels: a^2 b^3 (a*b)^5"), tight).verdict == Verdict::kUnknown);
}

TEST_CASE("is_trivial uses an injected enumerator") {
  int calls = 0;
  const auto p = parse_presentation("gens: a b; rels: a*b*a^-1*b^-2 b*a*b^-1*a^-2");
  const auto r = is_trivial(p, {}, [&](const Presentation& q, const EnumerationConfig& c) {
    ++calls;
    return coset_enumerate(q, {}, c);
  });
  CHECK(r.verdict == Verdict::kTrivial);
  CHECK(calls == 1);
}

TEST_CASE("finite quotient scan") {
  auto hits = finite_quotient_scan(parse_presentation("gens: a; rels: a^2"));
  CHECK(std::any_of(hits.begin(), hits.end(), [](const Epimorphism& e) { return e.group_id == "Z/2"; }));
  QuotientScanOptions four;
  four.max_order = 4;
  hits = finite_quotient_scan(parse_presentation("gens: a b; rels: [a,b]"), four);
  CHECK(std::any_of(hits.begin(), hits.end(), [](const Epimorphism& e) { return e.group_id == "Z/2"; }));
  for (const auto& e : hits) CHECK(e.group_order <= 4);
  QuotientScanOptions big;
  big.max_order = 17;
  CHECK_THROWS_AS(finite_quotient_scan(parse_presentation("gens: a; rels: a^2"), big), InputError);
}

TEST_CASE("finite quotient scan finds only genuine epimorphisms") {
  const auto library = quotient_library(16);
  for (const auto& c : oracle::group_corpus()) {
    CAPTURE(c.name);
    const auto p = parse_presentation(c.presentation);
    QuotientScanOptions opts;
    opts.max_order = 16;
    for (const auto& e : finite_quotient_scan(p, opts)) {
      const auto it = std::find_if(library.begin(), library.end(),
                                   [&](const FiniteGroup& f) { return f.id() == e.group_id; });
      REQUIRE(it != library.end());
      for (const auto& r : p.relators()) {
        std::uint32_t acc = 0;
        for (const auto l : r) {
          const auto x = e.images[l.generator()];
          acc = it->mul(acc, l.is_inverse() ? it->inv(x) : x);
        }
        CHECK(acc == 0);
      }
      CHECK(it->generated_order(e.images) == it->order());
      const auto order = static_cast<std::int64_t>(oracle::permutation_group_order(c.faithful));
      CHECK(order % it->order() == 0);
    }
  }
}
