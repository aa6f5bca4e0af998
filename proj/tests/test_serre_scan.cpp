#include <doctest.h>

#include "oracles.hpp"
#include "prat/errors.hpp"
#include "prat/p_rationality.hpp"
#include "prat/serre_scan.hpp"

using namespace prat;

namespace {

ScanConfig small_config(std::size_t N) {
  ScanConfig cfg;
  cfg.p = 5;
  cfg.t = 5;
  cfg.N = N;
  return cfg;
}

}  // namespace

TEST_CASE("f = G theta_t low coefficients") {
  auto f = build_f(small_config(6));
  CHECK(f[0] == 0);
  CHECK(f[1] == make_rational(1, 24));
  CHECK(f[5] == 0);
  CHECK(f[6] == make_rational(1, 12));
  CHECK(f.weight2() == 10);
  CHECK(f.character().discriminant() == 5);
  CHECK_NOTHROW(reduce_mod(build_f(small_config(300)), 5, 2));
}

TEST_CASE("modulus and candidates") {
  auto cfg = small_config(0);
  CHECK(cfg.modulus() == 500);
  cfg.ell_lo = 500;
  cfg.ell_hi = 20000;
  auto c = candidate_primes(cfg);
  CHECK(c == std::vector<std::uint64_t>{3001, 4001, 5501, 7001, 8501, 9001, 10501, 13001,
                                        16001, 19001, 19501});
  for (auto ell : c) CHECK(oracle::prime(ell));
  cfg.L = {3};
  CHECK(cfg.modulus() == 500 * 81);
  cfg.ell_lo = 10;
  cfg.ell_hi = 5;
  CHECK(candidate_primes(cfg).empty());
}

TEST_CASE("config validation") {
  auto cfg = small_config(10);
  cfg.t = 4;
  CHECK_THROWS_AS(validate(cfg), PreconditionError);
  cfg.t = 1;
  CHECK_THROWS_AS(validate(cfg), PreconditionError);
  cfg = small_config(10);
  cfg.p = 3;
  CHECK_THROWS_AS(validate(cfg), PreconditionError);
  cfg = small_config(10);
  cfg.L = {5};
  CHECK_THROWS_AS(validate(cfg), PreconditionError);
}

TEST_CASE("hyp_check") {
  auto r = hyp_check(5, 8, 1601);
  REQUIRE(r.cornacchia.has_value());
  CHECK(*r.cornacchia == CornacchiaSolution{8, 33});
  CHECK_FALSE(r.b_prime);
  const BigInt e = (eps_sigma(1, 4, 3) * eps_sigma(1, 4, 11)) % 25;
  CHECK(r.eps_sigma_b_mod_p2 == e.get_ui());
  CHECK(r.hp_holds == (e != 1));

  // 17 = 8 + 9
  auto s = hyp_check(5, 8, 17);
  REQUIRE(s.cornacchia.has_value());
  CHECK(s.cornacchia->b == 3);
  CHECK(s.b_prime);
  CHECK(s.hp_holds == s.wieferich_ok);

  // b = 2: eps_sigma(1, 4, 2) = 121 = 21 (mod 25)
  auto b2 = hyp_check(5, 13, 17);  // 17 = 13 + 4
  REQUIRE(b2.cornacchia.has_value());
  CHECK(b2.cornacchia->b == 2);
  CHECK(b2.eps_sigma_b_mod_p2 == 21);
  CHECK(b2.hp_holds);

  auto none = hyp_check(5, 5, 7);
  CHECK_FALSE(none.cornacchia.has_value());
  CHECK_FALSE(none.hp_holds);
}

TEST_CASE("hypothesis equivalence for prime b") {
  for (std::uint64_t p : {5, 7, 11}) {
    for (std::uint64_t t : {5, 8, 12, 13}) {
      for (auto ell : primes_up_to(5000)) {
        auto r = hyp_check(p, t, ell);
        if (!r.cornacchia || !r.b_prime || r.cornacchia->b == p) continue;
        CHECK(r.hp_holds == r.wieferich_ok);
      }
    }
  }
}

TEST_CASE("partition of c(ell)") {
  auto cfg = small_config(3000);
  auto f = build_f(cfg);
  for (auto ell : primes_up_to(3000)) {
    auto s = ab_split(cfg, ell);
    CHECK_MESSAGE(s.A + s.B == f[ell], "ell=" << ell);
  }
  cfg.L = {3};
  auto g = build_f(cfg);
  for (std::uint64_t n = 1; n <= 3000; n += 37) {
    auto s = ab_split(cfg, n);
    CHECK(s.A + s.B == g[n]);
  }
  CHECK_THROWS_AS(ab_report(cfg, 3001), PrecisionTooSmall);
}

TEST_CASE("residue path matches exact path") {
  for (auto L : {std::vector<std::uint64_t>{}, std::vector<std::uint64_t>{3}}) {
    auto cfg = small_config(5000);
    cfg.L = L;
    auto exact = reduce_mod(build_f(cfg), 5, 4);
    auto fast = build_f_residue(cfg);
    CHECK(exact.coeffs == fast.coeffs);
  }
}

TEST_CASE("scan over a small range") {
  auto cfg = small_config(3001 * 4);
  cfg.n_check = 4;
  cfg.ell_lo = 1;
  cfg.ell_hi = 3001;
  auto reports = scan_serre(cfg);
  REQUIRE(reports.size() == 1);
  const auto& r = reports[0];
  CHECK(r.ell == 3001);
  REQUIRE(r.cornacchia.has_value());
  CHECK(r.cornacchia->a * r.cornacchia->a * 5 + r.cornacchia->b * r.cornacchia->b == 3001);
  CHECK(r.ab_congruence_ok);

  auto exact = build_f(cfg);
  const bool congruent = [&] {
    for (std::size_t n = 1; n <= cfg.n_check; ++n) {
      auto lhs = reduce_rational(exact[n * 3001], 5, 2);
      auto rhs = reduce_rational(2 * exact[n], 5, 2);
      if (lhs != rhs) return false;
    }
    return true;
  }();
  CHECK(r.congruence_ok == congruent);
  if (r.extracted_d) {
    CHECK(is_p_rational_real(*r.extracted_d, 5).verdict == Verdict::p_rational);
    CHECK(*r.extracted_d < 3001);
  }

  cfg.N = 100;
  CHECK_THROWS_AS(scan_serre(cfg), PrecisionTooSmall);
  cfg.ell_lo = 5;
  cfg.ell_hi = 400;
  CHECK(scan_serre(cfg).empty());
}
