#include <doctest.h>

#include <algorithm>
#include <random>

#include "fourcalc/errors.hpp"
#include "fourcalc/lattice/int_matrix.hpp"
#include "fourcalc/lattice/json.hpp"
#include "fourcalc/lattice/lattice.hpp"
#include "fourcalc/lattice/smith.hpp"
#include "oracles.hpp"

using namespace fourcalc;
using namespace fourcalc::lattice;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
  std::uniform_int_distribution<std::int64_t> d(-spread, spread);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

IntLattice odd_form(std::size_t negatives) {
  std::vector<std::int64_t> d{1};
  d.insert(d.end(), negatives, -1);
  return diagonal_lattice("odd", d);
}

IntLattice random_unimodular_form(std::mt19937_64& rng) {
  IntLattice l = hyperbolic_lattice();
  const int extra = static_cast<int>(rng() % 4);
  for (int i = 0; i < extra; ++i) {
    switch (rng() % 3) {
      case 0: l = direct_sum(l, hyperbolic_lattice()); break;
      case 1: l = direct_sum(l, diagonal_lattice("p", {1})); break;
      default: l = direct_sum(l, diagonal_lattice("m", {-1})); break;
    }
  }
  // Same form in a scrambled basis.
  const IntMatrix u = oracle::random_unimodular(l.rank(), rng);
  return IntLattice("scrambled", l.basis_labels(), u * l.gram() * u.transpose(), Unimodular::kRequired);
}

}  // namespace

TEST_CASE("checked arithmetic") {
  CHECK(checked_mul(1LL << 31, 1LL << 31) == (1LL << 62));
  CHECK_THROWS_AS(checked_mul(1LL << 32, 1LL << 32), ResourceError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), ResourceError);
}

TEST_CASE("pairing examples") {
  const auto d = diagonal_lattice("d", {1, -1});
  CHECK(pairing(d, {1, 0}, {1, 0}) == 1);
  const auto six = odd_form(5);
  CHECK(pairing(six, {3, 1, 1, 1, 1, 1}, {3, 1, 1, 1, 1, 1}) == 4);
  CHECK(pairing(hyperbolic_lattice(), {1, 0}, {0, 1}) == 1);
  CHECK_THROWS_AS(pairing(d, {1, 0, 0}, {1, 0}), InputError);
}

TEST_CASE("characteristic examples") {
  const auto l = odd_form(5);
  CHECK(is_characteristic(l, {3, 1, 1, 1, 1, 1}));
  CHECK_FALSE(is_characteristic(l, {2, 1, 1, 1, 1, 1}));
  CHECK(is_characteristic(hyperbolic_lattice(), {0, 0}));
  CHECK_FALSE(is_characteristic(hyperbolic_lattice(), {1, 0}));
}

TEST_CASE("signature and parity examples") {
  auto sp = signature_and_parity(hyperbolic_lattice());
  CHECK(sp.signature == 0);
  CHECK(sp.parity == Parity::kEven);
  sp = signature_and_parity(odd_form(5));
  CHECK(sp.signature == -4);
  CHECK(sp.parity == Parity::kOdd);
  CHECK(sp.positive == 1);
  CHECK(sp.negative == 5);
  CHECK_THROWS_AS(signature_and_parity(diagonal_lattice("z", {1, 0})), InputError);
}

TEST_CASE("signature is additive and basis independent") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_unimodular_form(rng);
    const auto b = random_unimodular_form(rng);
    const auto sa = signature_and_parity(a);
    const auto sb = signature_and_parity(b);
    const auto ss = signature_and_parity(direct_sum(a, b));
    CHECK(ss.signature == sa.signature + sb.signature);
    CHECK(ss.positive == sa.positive + sb.positive);
    CHECK(sa.signature == oracle::signature_by_eigen_count(a.gram()));
    CHECK((ss.parity == Parity::kEven) == (sa.parity == Parity::kEven && sb.parity == Parity::kEven));
  }
}

TEST_CASE("smith normal form examples") {
  auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s.invariants == std::vector<std::int64_t>{1, 6});
  s = smith_normal_form(IntMatrix(2, 2));
  CHECK(s.invariants.empty());
  CHECK(s.rank() == 0);
}

TEST_CASE("smith normal form certificate and unimodular invariance") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, rows, cols, 6);
    const auto s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(s.left_inverse * s.diagonal * s.right_inverse == m);
    CHECK(std::abs(determinant(s.left)) == 1);
    CHECK(std::abs(determinant(s.right)) == 1);
    for (std::size_t k = 0; k < s.invariants.size(); ++k) {
      CHECK(s.invariants[k] > 0);
      CHECK(s.diagonal(k, k) == s.invariants[k]);
      if (k > 0) CHECK(s.invariants[k] % s.invariants[k - 1] == 0);
    }
    const auto [free_rank, factors] = oracle::abelian_invariants_by_minors(m);
    CHECK(static_cast<std::int64_t>(cols - s.rank()) == free_rank);
    CHECK(smith_invariants(m) == s.invariants);

    const IntMatrix p = oracle::random_unimodular(rows, rng);
    const IntMatrix q = oracle::random_unimodular(cols, rng);
    CHECK(smith_normal_form(p * m * q).invariants == s.invariants);
  }
}

TEST_CASE("smith invariants of dense matrices multiply to the determinant") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 6 + rng() % 7;
    const IntMatrix m = random_matrix(rng, n, n, 9);
    const auto inv = smith_invariants(m);
    const std::int64_t det = determinant(m);
    if (det == 0) {
      CHECK(inv.size() < n);
      continue;
    }
    REQUIRE(inv.size() == n);
    std::int64_t product = 1;
    for (const auto d : inv) product = checked_mul(product, d);
    CHECK(product == std::abs(det));
  }
}

TEST_CASE("determinant and unimodular inverse") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const IntMatrix u = oracle::random_unimodular(n, rng);
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(n));
    const IntMatrix a = random_matrix(rng, n, n, 4);
    const IntMatrix b = random_matrix(rng, n, n, 4);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), InputError);
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> d(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const auto l = random_unimodular_form(rng);
    LatticeVector v = LatticeVector::zero(l.rank()), w = v, x = v;
    for (std::size_t k = 0; k < l.rank(); ++k) {
      v[k] = d(rng);
      w[k] = d(rng);
      x[k] = d(rng);
    }
    CHECK(pairing(l, v, w) == pairing(l, w, v));
    CHECK(pairing(l, v + x, w) == pairing(l, v, w) + pairing(l, x, w));
    CHECK(pairing(l, 3 * v, w) == 3 * pairing(l, v, w));
    CHECK(from_evaluations(l, evaluations(l, v)) == v);
  }
}

TEST_CASE("characteristic vectors are stable under even shifts and square congruent to signature") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  int checked = 0;
  while (checked < 1000) {
    const auto l = random_unimodular_form(rng);
    std::vector<std::int64_t> evals(l.rank());
    for (std::size_t k = 0; k < l.rank(); ++k) {
      const std::int64_t parity = ((l.gram()(k, k) % 2) + 2) % 2;
      evals[k] = 2 * d(rng) + parity;
    }
    const LatticeVector k = from_evaluations(l, evals);
    REQUIRE(is_characteristic(l, k));
    LatticeVector v = LatticeVector::zero(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) v[i] = d(rng);
    CHECK(is_characteristic(l, k + 2 * v));
    CHECK(is_characteristic(l, -k));
    const auto ev = evaluations(l, v);
    const bool odd = std::any_of(ev.begin(), ev.end(), [](std::int64_t e) { return e % 2 != 0; });
    CHECK(is_characteristic(l, k + v) == !odd);
    // van der Blij: K^2 = sigma (mod 8).
    const auto sig = signature_and_parity(l).signature;
    CHECK(((square(l, k) - sig) % 8 + 8) % 8 == 0);
    ++checked;
  }
}

TEST_CASE("combine_surfaces examples") {
  const auto h = hyperbolic_lattice();
  const auto sum = direct_sum(h, diagonal_lattice("m", {-1}));
  const auto x = make_surface(sum, "x", {1, 0, 0}, 2);
  const auto q = make_surface(sum, "q", {0, 1, 1}, 1);
  REQUIRE(x.square == 0);
  REQUIRE(q.square == -1);
  REQUIRE(pairing(sum, x.klass, q.klass) == 1);
  const auto c = combine_surfaces(sum, x, q, 1);
  CHECK(c.genus == 3);
  CHECK(c.square == 1);

  const auto h2 = direct_sum(h, h);
  const auto big = direct_sum(h2, diagonal_lattice("m", {-1}));
  const auto x2 = make_surface(big, "x", {1, 0, 0, 0, 0}, 2);
  const auto q2 = make_surface(big, "q", {0, 2, 0, 0, 1}, 2);
  REQUIRE(q2.square == -1);
  REQUIRE(pairing(big, x2.klass, q2.klass) == 2);
  const auto c2 = combine_surfaces(big, x2, q2, 2);
  CHECK(c2.genus == 5);
  CHECK(c2.square == 3);

  const auto t1 = make_surface(h, "a", {1, 0}, 1);
  const auto t2 = make_surface(h, "b", {0, 1}, 1);
  const auto c3 = combine_surfaces(h, t1, t2, 1);
  CHECK(c3.genus == 2);
  CHECK(c3.square == 2);
  CHECK_THROWS_AS(combine_surfaces(h, t1, t2, 2), InputError);
}

TEST_CASE("combine_surfaces square equals square of the sum") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  int done = 0;
  while (done < 1000) {
    const auto l = random_unimodular_form(rng);
    LatticeVector a = LatticeVector::zero(l.rank()), b = a;
    for (std::size_t k = 0; k < l.rank(); ++k) {
      a[k] = d(rng);
      b[k] = d(rng);
    }
    const auto k = pairing(l, a, b);
    if (k <= 0) continue;
    const auto s1 = make_surface(l, "a", a, 1 + static_cast<std::int64_t>(rng() % 3));
    const auto s2 = make_surface(l, "b", b, 1 + static_cast<std::int64_t>(rng() % 3));
    const auto c = combine_surfaces(l, s1, s2, k);
    CHECK(c.square == square(l, a + b));
    CHECK(c.genus == s1.genus + s2.genus + k - 1);
    CHECK(c.klass == a + b);
    ++done;
  }
}

TEST_CASE("direct sum and remove_summand") {
  const auto l = direct_sum(direct_sum(hyperbolic_lattice("A"), diagonal_lattice("m", {-1})), hyperbolic_lattice("B"));
  CHECK(l.rank() == 5);
  const auto& labels = l.basis_labels();
  const auto r = remove_summand(l, {labels[3], labels[4]}, "rest");
  CHECK(r.rank() == 3);
  CHECK(signature_and_parity(r).signature == -1);
  CHECK_THROWS_AS(remove_summand(l, {labels[0], labels[2]}, "bad"), InputError);
}

TEST_CASE("lattice json round trip") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 1000; ++i) {
    const auto l = random_unimodular_form(rng);
    const auto back = lattice_from_json(to_json(l));
    CHECK(back == l);
    CHECK(back.gram() == l.gram());
  }
  const auto parsed = lattice_from_json(nlohmann::json{{"name", "S"}, {"blocks", {"H", -1, 1}}});
  CHECK(parsed.rank() == 4);
  CHECK(parsed.basis_labels().front() == "b1");
  CHECK(signature_and_parity(parsed).signature == 0);
  CHECK_THROWS_AS(lattice_from_json(nlohmann::json{{"gram", {{1, 2}, {3, 1}}}}), InputError);
}
