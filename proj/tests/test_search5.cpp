#include <doctest.h>

#include "oracles.hpp"
#include "prat/cohen.hpp"
#include "prat/errors.hpp"
#include "prat/p_rationality.hpp"
#include "prat/search5.hpp"

using namespace prat;

TEST_CASE("identity spot values") {
  auto e1 = identity_eval(1);
  CHECK(e1.lhs == make_rational(1, 60));
  CHECK(e1.rhs_divisor_term == make_rational(2, 300));
  CHECK(e1.rhs_two_square_term == make_rational(4, 400));
  CHECK(e1.equal);
  auto e30 = identity_eval(30);
  CHECK(e30.rhs_divisor_term == 2504);
  CHECK(e30.rhs_two_square_term == 0);
  CHECK(e30.lhs == 2504);
  auto e78 = identity_eval(78);
  CHECK(e78.rhs_divisor_term + e78.rhs_two_square_term == 114248);
  CHECK(e78.equal);
}

TEST_CASE("identity holds for small n") {
  for (std::uint64_t n = 1; n <= 120; ++n) CHECK_MESSAGE(identity_eval(n).equal, "n=" << n);
}

TEST_CASE("find_d") {
  auto w = find_d(13, 3);
  // candidates 2*13*3 - x^2 for odd x: 77, 69, 53, 29
  std::int64_t best = 0;
  for (std::int64_t d : {77, 69, 53, 29}) {
    if (vp(oracle::l_value(4, d), 5) == 0 && (best == 0 || d < best)) best = d;
  }
  CHECK(w.d == best);
  CHECK(static_cast<std::int64_t>(78) == w.x * w.x + w.d * w.y * w.y);
  CHECK(w.l_value == oracle::l_value(4, w.d));

  CHECK_THROWS_AS(find_d(13, 7), PreconditionError);
  CHECK_THROWS_AS(find_d(5, 3), PreconditionError);
  CHECK_THROWS_AS(find_d(13, 5), PreconditionError);
  CHECK_THROWS_AS(find_d(7, 3), PreconditionError);
  CHECK_THROWS_AS(find_d(13, 13), PreconditionError);
}

TEST_CASE("find_d invariants over many pairs") {
  int checked = 0;
  for (auto ell : primes_up_to(200)) {
    if (ell % 4 != 1 || ell == 5) continue;
    for (auto lp : primes_up_to(120)) {
      if (lp % 4 != 3) continue;
      const BigInt q = to_big(lp);
      if (vp(BigInt(1 - q * q * q * q), 5) != 1) continue;
      auto w = find_d(ell, lp);
      const auto n = static_cast<std::int64_t>(2 * ell * lp);
      CHECK(n == w.x * w.x + w.d * w.y * w.y);
      CHECK(w.x % 2 == 1);
      CHECK(oracle::fundamental(w.d));
      CHECK(w.d < n);
      CHECK(w.d % 5 != 0);
      CHECK(kronecker(w.d, static_cast<std::int64_t>(lp)) != 1);
      CHECK(is_p_rational_real(w.d, 5).verdict == Verdict::p_rational);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("sieve") {
  std::vector<std::int64_t> five{5}, none;
  CHECK(sieve_lemma42(five, 100) == std::vector<std::uint64_t>{11, 31, 71});
  CHECK(sieve_lemma42(none, 20) == std::vector<std::uint64_t>{11});
  for (auto ell : sieve_lemma42(none, 5000)) {
    const BigInt q = to_big(ell);
    CHECK(vp(BigInt(1 - q * q * q * q), 5) == 1);
    CHECK(ell % 4 == 3);
  }
}

TEST_CASE("next_new_5rational") {
  std::vector<std::int64_t> known{8, 12};
  auto r = next_new_5rational(known, 100000, 1000);
  REQUIRE(r.has_value());
  CHECK(kronecker(r->d_new, static_cast<std::int64_t>(r->ell)) != 1);
  CHECK(kronecker(8, static_cast<std::int64_t>(r->ell)) == 1);
  CHECK(kronecker(12, static_cast<std::int64_t>(r->ell)) == 1);
  CHECK(r->d_new != 8);
  CHECK(r->d_new != 12);
  CHECK(is_p_rational_real(r->d_new, 5).verdict == Verdict::p_rational);

  std::vector<std::int64_t> none;
  auto first = next_new_5rational(none, 1000, 1000);
  REQUIRE(first.has_value());
  CHECK(first->ell == 11);
  CHECK(first->ell_second == 13);
  CHECK_FALSE(next_new_5rational(known, 10, 1000).has_value());
}
