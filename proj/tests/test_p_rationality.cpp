#include <doctest.h>

#include "oracles.hpp"
#include "prat/cohen.hpp"
#include "prat/errors.hpp"
#include "prat/p_rationality.hpp"

using namespace prat;

TEST_CASE("real verdicts") {
  auto r = is_p_rational_real(8, 5);
  CHECK(r.l_value == BigRational(11));
  CHECK(r.valuation == 0);
  CHECK(r.verdict == Verdict::p_rational);
  CHECK(r.reason == "ok");

  r = is_p_rational_real(12, 5);
  CHECK(r.l_value == BigRational(46));
  CHECK(r.verdict == Verdict::p_rational);

  r = is_p_rational_real(5, 5);
  CHECK(r.verdict == Verdict::not_applicable);
  CHECK(r.reason == "p_divides_d");
  CHECK_FALSE(r.l_value.has_value());

  CHECK_THROWS_AS(is_p_rational_real(9, 5), PreconditionError);
  CHECK_THROWS_AS(is_p_rational_real(8, 4), PreconditionError);
  CHECK_THROWS_AS(is_p_rational_real(-4, 5), PreconditionError);
}

TEST_CASE("not p-rational fields exist and are flagged") {
  bool seen = false;
  for (const auto& r : scan_real(5, 2000)) {
    if (r.verdict == Verdict::not_p_rational) {
      seen = true;
      CHECK(*r.valuation > 0);
    }
  }
  CHECK(seen);
}

TEST_CASE("imaginary sufficient condition") {
  auto r = is_p_rational_imag_sufficient(-4, 5);
  CHECK(r.l_value == BigRational(1));
  CHECK(r.verdict == Verdict::p_rational);
  r = is_p_rational_imag_sufficient(-47, 5);
  CHECK(r.l_value == BigRational(5));
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK(r.reason == "p_divides_h");
  CHECK_THROWS_AS(is_p_rational_imag_sufficient(-23, 3), PreconditionError);
  CHECK_THROWS_AS(is_p_rational_imag_sufficient(8, 5), PreconditionError);
}

TEST_CASE("scan_real") {
  auto rs = scan_real(5, 13);
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].d == 5);
  CHECK(rs[0].verdict == Verdict::not_applicable);
  CHECK(rs[1].d == 8);
  CHECK(rs[1].verdict == Verdict::p_rational);
  CHECK(rs[2].d == 12);
  CHECK(rs[3].d == 13);
  CHECK_THROWS_AS(scan_real(5, 4), PreconditionError);

  auto a = scan_real(7, 400, 1), b = scan_real(7, 400, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].d == b[k].d);
    CHECK(a[k].l_value == b[k].l_value);
    CHECK(a[k].verdict == b[k].verdict);
    if (a[k].valuation) CHECK(*a[k].valuation >= 0);
  }
}

TEST_CASE("verdict agrees with the Cohen coefficient path") {
  for (std::int64_t d = 2; d <= 300; ++d) {
    if (!oracle::fundamental(d) || d % 5 == 0) continue;
    auto h = h_coeff(4, static_cast<std::uint64_t>(d));
    auto r = is_p_rational_real(d, 5);
    CHECK(h == *r.l_value);
    CHECK((vp(h, 5) == 0) == (r.verdict == Verdict::p_rational));
  }
}
