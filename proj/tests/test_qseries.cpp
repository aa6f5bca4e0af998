#include <doctest.h>

#include "gen.hpp"
#include "oracles.hpp"
#include "prat/errors.hpp"
#include "prat/qseries.hpp"

using namespace prat;

TEST_CASE("ring operations") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 30; ++k) {
    auto f = gen::series(rng, 40), g = gen::series(rng, 30), h = gen::series(rng, 35);
    CHECK(qs_mul(f, g).coeffs() == qs_mul(g, f).coeffs());
    CHECK(qs_mul(qs_mul(f, g), h).coeffs() == qs_mul(f, qs_mul(g, h)).coeffs());
    CHECK(qs_mul(f, g).precision() == 30);
    CHECK(qs_sub(qs_add(f, g), g).coeffs() == f.truncated(30).coeffs());
    CHECK(qs_scale(f, 0).coeffs() == QExpansion::zero(40).coeffs());
    const auto fg = qs_mul(f, g);
    for (std::size_t n = 0; n <= 30; n += 7) {
      BigRational direct = 0;
      for (std::size_t i = 0; i <= n; ++i) direct += f[i] * g[n - i];
      CHECK(fg[n] == direct);
    }
  }
}

TEST_CASE("product metadata") {
  auto th = theta_t(5, 10);
  CHECK(th.weight2() == 1);
  CHECK(th.level() == 20);
  CHECK(th.character().discriminant() == 5);
  auto sq = qs_mul(th, th);
  CHECK(sq.weight2() == 2);
  CHECK(sq.character().is_trivial());
  auto mixed = qs_mul(theta_t(1, 10), theta_t(2, 10));
  CHECK(mixed.character().discriminant() == 8);
  QExpansion odd({BigRational(1)}, 1, 4, QuadCharacter(-4));
  CHECK(qs_mul(odd, theta_t(2, 10)).character().discriminant() == -8);
}

TEST_CASE("theta cubed counts sums of three squares") {
  auto th = theta_t(1, 120);
  auto cube = qs_mul(qs_mul(th, th), th);
  for (std::int64_t n = 0; n <= 120; ++n) {
    CHECK(cube[static_cast<std::size_t>(n)] == static_cast<long>(oracle::r3(n)));
  }
}

TEST_CASE("B_m composes") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    auto f = gen::series(rng, 120);
    for (auto [m, j] : {std::pair{2u, 3u}, {4u, 9u}, {5u, 2u}, {1u, 7u}}) {
      CHECK(op_B(op_B(f, m), j) == op_B(f, m * j));
    }
    // shared factors: the supports intersect at multiples of lcm(m, j)
    CHECK(op_B(op_B(f, 4), 6).coeffs() == op_B(f, 12).coeffs());
  }
}

TEST_CASE("restriction: filtered and composed routes agree") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    auto f = gen::series(rng, 150);
    for (std::uint64_t ell : {3, 5, 7, 11, 13}) {
      auto a = op_restrict(f, ell), b = op_restrict_composed(f, ell);
      CHECK(a.coeffs() == b.coeffs());
      for (std::size_t n = 0; n <= 150; ++n) {
        if (a[n] != 0) CHECK(kronecker(static_cast<std::int64_t>(n), ell) == 1);
      }
    }
  }
  CHECK_THROWS_AS(op_restrict(QExpansion::zero(5), 2), PreconditionError);
  CHECK_THROWS_AS(op_restrict(QExpansion::zero(5), 9), PreconditionError);
}

TEST_CASE("twist") {
  auto th = theta_t(1, 30);
  auto tw = op_twist(th, QuadCharacter(-4));
  CHECK(tw[0] == 0);
  CHECK(tw[1] == 2);
  CHECK(tw[4] == 0);
  CHECK(tw[9] == 2);
  CHECK(tw.level() == 4 * 16);
}

TEST_CASE("Hecke operator") {
  std::mt19937_64 rng(4);
  auto f = gen::series(rng, 100, 5), g = gen::series(rng, 100, 5);
  QuadCharacter psi(5);
  auto Tf = hecke(f, 7, 3, psi);
  CHECK(Tf.precision() == 100 / 7);
  for (std::size_t n = 0; n <= Tf.precision(); ++n) {
    BigRational expect = f[7 * n];
    if (n % 7 == 0) expect += BigRational(psi(7) * 49) * f[n / 7];
    CHECK(Tf[n] == expect);
  }
  auto lhs = hecke(qs_add(qs_scale(f, 3), g), 7, 3, psi);
  auto rhs = qs_add(qs_scale(Tf, 3), hecke(g, 7, 3, psi));
  CHECK(lhs.coeffs() == rhs.coeffs());
  CHECK(reduce_mod(Tf, 5, 3) == hecke(reduce_mod(f, 5, 3), 7, 3, psi));
  CHECK_THROWS_AS(hecke(f.truncated(5), 7, 3, psi), PrecisionTooSmall);
  CHECK_THROWS_AS(hecke(f, 6, 3, psi), PreconditionError);
}

TEST_CASE("reduction") {
  std::vector<BigRational> c{BigRational(1, 3), BigRational(2), BigRational(1, 10)};
  QExpansion f(c);
  try {
    reduce_mod(f, 5, 2);
    FAIL("expected a throw");
  } catch (const DenominatorNotInvertible& e) {
    CHECK(e.index() == 2);
  }
  auto r = reduce_mod(f.truncated(1), 5, 2);
  CHECK(r.modulus() == 25);
  CHECK(r.coeffs == std::vector<std::uint64_t>{17, 2});
  CHECK(reduce_rational(BigRational(-1, 12), 5, 2) == oracle::reduce(BigRational(-1, 12), 5, 2));
}

TEST_CASE("theta multiplication mod p^e") {
  std::mt19937_64 rng(6);
  for (std::uint64_t t : {1, 5, 8, 13}) {
    for (unsigned e : {2u, 4u, 9u}) {
      auto f = gen::series(rng, 400, 5);
      auto exact = reduce_mod(qs_mul(f, theta_t(t, 400)), 5, e);
      auto fast = residue_mul_theta(reduce_mod(f, 5, e), t);
      CHECK(exact.coeffs == fast.coeffs);
    }
  }
}
