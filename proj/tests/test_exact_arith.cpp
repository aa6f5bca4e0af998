#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prat/errors.hpp"
#include "prat/exact_arith.hpp"

using namespace prat;

TEST_CASE("kronecker agrees with Euler's criterion") {
  for (std::int64_t D = -60; D <= 60; ++D) {
    for (std::int64_t n = -60; n <= 60; ++n) {
      CHECK_MESSAGE(kronecker(D, n) == oracle::kronecker(D, n), "D=" << D << " n=" << n);
    }
  }
}

TEST_CASE("kronecker large arguments") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    auto D = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
    auto n = static_cast<std::int64_t>(rng() % 1000000) + 1;
    CHECK(kronecker(D, n) == oracle::kronecker(D, n));
  }
}

TEST_CASE("primality") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == oracle::prime(n));
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK(is_prime(18446744073709551557ULL));
  auto ps = primes_up_to(100);
  CHECK(ps.size() == 25);
  CHECK(ps.back() == 97);
}

TEST_CASE("factorize reconstructs n") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    std::uint64_t n = (rng() >> (rng() % 40)) | 1;
    if (k % 3 == 0) n = (rng() % 1000003) * (rng() % 1000003) + 1;
    auto f = factorize(n);
    BigInt prod = 1;
    std::uint64_t last = 0;
    for (auto [q, e] : f) {
      CHECK(is_prime(q));
      CHECK(q > last);
      last = q;
      for (unsigned j = 0; j < e; ++j) prod *= to_big(q);
    }
    CHECK(prod == to_big(n));
  }
  CHECK_THROWS_AS(factorize(0), PreconditionError);
  CHECK(factorize(1).empty());
}

TEST_CASE("multiplicative functions") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(moebius(n) == oracle::mobius(n));
    CHECK(sigma_pow(3, n) == oracle::sigma(3, n));
    auto ds = divisors(n);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    std::size_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d) count += n % d == 0;
    CHECK(ds.size() == count);
  }
}

TEST_CASE("fundamental discriminants") {
  for (std::int64_t D = -600; D <= 600; ++D) {
    CHECK_MESSAGE(is_fundamental_discriminant(D) == oracle::fundamental(D), "D=" << D);
  }
  CHECK(field_discriminant(2) == 8);
  CHECK(field_discriminant(3) == 12);
  CHECK(field_discriminant(5) == 5);
  CHECK(field_discriminant(-1) == -4);
  CHECK(field_discriminant(18) == 8);
  CHECK(field_discriminant(9) == 1);
}

TEST_CASE("squarefree_decompose") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    for (auto par : {Parity::even, Parity::odd}) {
      const std::int64_t s = par == Parity::even ? static_cast<std::int64_t>(n)
                                                 : -static_cast<std::int64_t>(n);
      const auto r = ((s % 4) + 4) % 4;
      auto split = squarefree_decompose(n, par);
      if (r == 2 || r == 3) {
        CHECK_FALSE(split.has_value());
        continue;
      }
      REQUIRE(split.has_value());
      CHECK(split->d * static_cast<std::int64_t>(split->m * split->m) == s);
      CHECK((split->d == 1 || oracle::fundamental(split->d)));
    }
  }
}

TEST_CASE("cornacchia against brute force") {
  for (std::uint64_t t : {1, 2, 3, 5, 8, 12, 13, 21}) {
    for (auto ell : primes_up_to(3000)) {
      if (t % ell == 0) continue;
      auto reps = oracle::reps_t(t, ell);
      auto sol = cornacchia(t, ell);
      CHECK_MESSAGE(sol.has_value() == !reps.empty(), "t=" << t << " ell=" << ell);
      if (!sol) continue;
      CHECK(t * sol->a * sol->a + sol->b * sol->b == ell);
      if (t == 1) CHECK(sol->a <= sol->b);
    }
  }
  CHECK(cornacchia(8, 1601) == CornacchiaSolution{8, 33});
  CHECK_THROWS_AS(cornacchia(3, 9), PreconditionError);
  CHECK_THROWS_AS(cornacchia(0, 7), PreconditionError);
  CHECK_THROWS_AS(cornacchia(7, 7), PreconditionError);
}

TEST_CASE("sqrt_mod_prime") {
  for (auto p : primes_up_to(400)) {
    for (std::uint64_t a = 0; a < p; ++a) {
      auto r = sqrt_mod_prime(a, p);
      bool residue = false;
      for (std::uint64_t x = 0; x < p; ++x) residue |= x * x % p == a;
      CHECK(r.has_value() == residue);
      if (r) CHECK(*r * *r % p == a);
    }
  }
}

TEST_CASE("valuations") {
  CHECK(vp(make_rational(1, 120), 5) == -1);
  CHECK(vp(make_rational(50, 3), 5) == 2);
  CHECK(vp(BigRational(0), 5) == kValuationInfinity);
  CHECK(vp(BigInt(-2400), 5) == 2);
  CHECK_THROWS_AS(vp(BigInt(10), 4), PreconditionError);
}

TEST_CASE("word arithmetic") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    std::uint64_t m = rng() | 1, a = rng() % m, b = rng() % m;
    CHECK(mulmod(a, b, m) ==
          static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m));
    std::uint64_t e = rng() % 1000;
    CHECK(powmod(a, e, m) == oracle::pow_mod(a, e, m));
  }
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(invmod(3, 7) == 5u);
  CHECK_FALSE(invmod(5, 25).has_value());
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(std::uint64_t{1} << 62) == std::uint64_t{1} << 31);
  CHECK(is_square(1444));
  CHECK_FALSE(is_square(1445));
}

TEST_CASE("wieferich and two squares") {
  CHECK(is_wieferich(1093, 2));
  CHECK_FALSE(is_wieferich(5, 2));
  CHECK(is_wieferich(5, 7));
  CHECK_THROWS_AS(is_wieferich(5, 10), PreconditionError);
  CHECK(two_square_reps(25).size() == 12);
  CHECK(two_square_reps(30).empty());
  using P = std::pair<std::int64_t, std::int64_t>;
  CHECK(two_square_reps(1) == std::vector<P>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
}

TEST_CASE("rational text") {
  CHECK(to_string(make_rational(11)) == "11/1");
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  auto f = parse_fraction("-12/7");
  REQUIRE(f);
  CHECK(f->first == -12);
  CHECK(f->second == 7);
  CHECK_FALSE(parse_fraction("1/").has_value());
  CHECK_FALSE(parse_fraction("a/2").has_value());
  CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
}
