#include "prat/p_rationality.hpp"

#include "prat/dirichlet.hpp"
#include "prat/errors.hpp"

namespace prat {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw PreconditionError("not_prime", "p must be an odd prime, got " + std::to_string(p));
  }
}

void require_fundamental(std::int64_t d) {
  if (!is_fundamental_discriminant(d)) {
    throw PreconditionError("not_fundamental",
                            std::to_string(d) + " is not a fundamental discriminant");
  }
}

bool divides(std::uint64_t p, std::int64_t d) {
  return static_cast<std::uint64_t>(d < 0 ? -d : d) % p == 0;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::p_rational: return "p_rational";
    case Verdict::not_p_rational: return "not_p_rational";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

RationalityReport is_p_rational_real(std::int64_t d, std::uint64_t p) {
  require_odd_prime(p);
  require_fundamental(d);
  if (d <= 1) throw PreconditionError("not_real", "d must be a positive discriminant");
  RationalityReport r;
  r.d = d;
  r.p = p;
  if (divides(p, d)) {
    r.verdict = Verdict::not_applicable;
    r.reason = "p_divides_d";
    return r;
  }
  r.l_value = l_neg(static_cast<unsigned>(p - 1), QuadCharacter(d)).value;
  r.valuation = vp(*r.l_value, p);
  r.verdict = *r.valuation == 0 ? Verdict::p_rational : Verdict::not_p_rational;
  r.reason = "ok";
  return r;
}

RationalityReport is_p_rational_imag_sufficient(std::int64_t d, std::uint64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw PreconditionError("not_prime", "p must be a prime >= 5, got " + std::to_string(p));
  }
  require_fundamental(d);
  if (d >= 0) throw PreconditionError("not_imaginary", "d must be negative");
  RationalityReport r;
  r.d = d;
  r.p = p;
  const std::uint64_t h = class_number_imag(d);
  r.l_value = BigRational(to_big(h));
  r.valuation = vp(to_big(h), p);
  if (h % p != 0) {
    r.verdict = Verdict::p_rational;
    r.reason = "ok";
  } else {
    r.verdict = Verdict::inconclusive;
    r.reason = "p_divides_h";
  }
  return r;
}

std::vector<RationalityReport> scan_real(std::uint64_t p, std::uint64_t d_max, unsigned jobs,
                                         const ProgressFn& progress) {
  require_odd_prime(p);
  if (d_max < 5) throw PreconditionError("invalid_argument", "d_max must be at least 5");
  std::vector<std::int64_t> ds;
  for (std::uint64_t d = 2; d <= d_max; ++d) {
    if (is_fundamental_discriminant(static_cast<std::int64_t>(d))) {
      ds.push_back(static_cast<std::int64_t>(d));
    }
  }
  std::vector<RationalityReport> out(ds.size());
  parallel_for(
      ds.size(), jobs, [&](std::size_t k) { out[k] = is_p_rational_real(ds[k], p); }, progress);
  return out;
}

}  // namespace prat
