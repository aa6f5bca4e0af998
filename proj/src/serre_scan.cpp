#include "prat/serre_scan.hpp"

#include "prat/errors.hpp"
#include "prat/p_rationality.hpp"

namespace prat {

namespace {

BigRational alpha(std::uint64_t x) { return x == 0 ? 1 : 2; }

// Terms alpha(x) h1(p - 1, y) of c(ell) for ell = t x^2 + y, y in N, y > 0.
template <typename Fn>
void for_each_rep(const ScanConfig& cfg, std::uint64_t ell, Fn&& fn) {
  for (std::uint64_t x = 0; cfg.t * x * x < ell; ++x) {
    const std::uint64_t y = ell - cfg.t * x * x;
    if (!in_restriction_set(y, cfg.L)) continue;
    fn(x, y);
  }
}

std::uint64_t mod_p2(const BigRational& q, std::uint64_t p) { return reduce_rational(q, p, 2); }

}  // namespace

std::uint64_t ScanConfig::modulus() const {
  std::uint64_t m = 4 * t * p * p;
  for (auto ell : L) m *= ipow(ell, 4);
  return m;
}

void validate(const ScanConfig& cfg) {
  if (cfg.p < 5 || !is_prime(cfg.p)) {
    throw PreconditionError("not_prime", "p must be a prime >= 5");
  }
  if (cfg.t <= 1 || !is_fundamental_discriminant(static_cast<std::int64_t>(cfg.t))) {
    throw PreconditionError("not_fundamental", "t must be a fundamental discriminant > 1");
  }
  validate_restriction_primes(cfg.L, cfg.p);
  if (cfg.residue_e < 2) throw PreconditionError("invalid_argument", "residue_e must be >= 2");
  if (cfg.n_check == 0) throw PreconditionError("invalid_argument", "n_check must be positive");
}

std::vector<std::uint64_t> candidate_primes(const ScanConfig& cfg) {
  const std::uint64_t M = cfg.modulus();
  std::vector<std::uint64_t> out;
  std::uint64_t ell = cfg.ell_lo <= 1 ? M + 1 : cfg.ell_lo + (M + 1 - cfg.ell_lo % M) % M;
  for (; ell <= cfg.ell_hi; ell += M) {
    if (is_prime(ell)) out.push_back(ell);
  }
  return out;
}

QExpansion build_f(const ScanConfig& cfg) {
  validate(cfg);
  return qs_mul(g_series(cfg.p, cfg.L, cfg.N), theta_t(cfg.t, cfg.N));
}

ResidueSeries build_f_residue(const ScanConfig& cfg, unsigned jobs, const ProgressFn& progress) {
  validate(cfg);
  auto g = g_residue_series(cfg.p, cfg.L, cfg.N, cfg.residue_e, jobs, progress);
  return residue_mul_theta(g, cfg.t);
}

SerreScanReport hyp_check(std::uint64_t p, std::uint64_t t, std::uint64_t ell) {
  if (!is_prime(p)) throw PreconditionError("not_prime", "p must be prime");
  if (!is_prime(ell)) throw PreconditionError("not_prime", "ell must be prime");
  SerreScanReport r;
  r.ell = ell;
  if (t % ell == 0) return r;
  r.cornacchia = cornacchia(t, ell);
  if (!r.cornacchia) return r;
  const std::uint64_t b = r.cornacchia->b;
  const std::uint64_t p2 = p * p;
  r.b_prime = is_prime(b);
  if (r.b_prime) r.wieferich_ok = b != p && !is_wieferich(p, b);
  r.eps_sigma_b_mod_p2 = eps_sigma_mod(1, static_cast<unsigned>(p - 1), b, p2);
  r.hp_holds = r.eps_sigma_b_mod_p2 != 1;
  return r;
}

ABSplit ab_split(const ScanConfig& cfg, std::uint64_t ell) {
  validate(cfg);
  ABSplit s{0, 0};
  for_each_rep(cfg, ell, [&](std::uint64_t x, std::uint64_t y) {
    BigRational term = alpha(x) * h1_coeff(cfg.p, y);
    if (is_square(y)) s.B += term; else s.A += term;
  });
  s.A.canonicalize();
  s.B.canonicalize();
  return s;
}

ABReport ab_report(const ScanConfig& cfg, std::uint64_t ell) {
  if (ell > cfg.N) throw PrecisionTooSmall(ell);
  const std::uint64_t p = cfg.p;
  const std::uint64_t p2 = p * p;
  auto s = ab_split(cfg, ell);
  ABReport r;
  r.A_mod_p2 = mod_p2(s.A, p);
  r.B_mod_p2 = mod_p2(s.B, p);
  const std::uint64_t c1 = mod_p2(h1_coeff(p, 1), p);
  const std::uint64_t c_ell = (r.A_mod_p2 + r.B_mod_p2) % p2;
  const std::uint64_t two_c1 = 2 * c1 % p2;
  const bool congruent = c_ell == two_c1;
  r.ab_congruence_ok = !congruent || r.A_mod_p2 == (two_c1 + p2 - r.B_mod_p2) % p2;
  return r;
}

std::optional<ExtractedDiscriminant> extract_d(const ScanConfig& cfg, std::uint64_t ell) {
  validate(cfg);
  std::optional<ExtractedDiscriminant> found;
  for_each_rep(cfg, ell, [&](std::uint64_t x, std::uint64_t y) {
    if (found || is_square(y) || y % cfg.p == 0) return;
    if (vp(alpha(x) * h1_coeff(cfg.p, y), cfg.p) != 1) return;
    auto split = squarefree_decompose(y, Parity::even);
    if (!split || split->d <= 1) return;
    const auto d = split->d;
    if (static_cast<std::uint64_t>(d) >= ell || !in_restriction_set(d, cfg.L)) return;
    if (is_p_rational_real(d, cfg.p).verdict != Verdict::p_rational) return;
    found = ExtractedDiscriminant{d, x, split->m};
  });
  return found;
}

std::vector<SerreScanReport> scan_serre(const ScanConfig& cfg, const ResidueSeries* f,
                                        unsigned jobs, const ProgressFn& progress) {
  validate(cfg);
  const auto ells = candidate_primes(cfg);
  if (ells.empty()) return {};
  const std::size_t required = static_cast<std::size_t>(cfg.ell_hi) * cfg.n_check;
  if (cfg.N < required) throw PrecisionTooSmall(required);

  std::optional<ResidueSeries> built;
  if (!f) {
    built = build_f_residue(cfg, jobs, progress);
    f = &*built;
  }
  if (f->p != cfg.p || f->e < 2 || f->precision() < required) {
    throw PreconditionError("invalid_argument", "residue series does not match the scan");
  }
  const QuadCharacter psi(static_cast<std::int64_t>(cfg.t));
  const std::uint64_t p2 = cfg.p * cfg.p;
  const auto weight = static_cast<unsigned>(cfg.p);

  std::vector<SerreScanReport> out(ells.size());
  parallel_for(ells.size(), jobs, [&](std::size_t k) {
    const std::uint64_t ell = ells[k];
    if (psi(static_cast<std::int64_t>(ell)) != 1) {
      throw Error("internal", "character value at a candidate prime is not 1");
    }
    SerreScanReport r = hyp_check(cfg.p, cfg.t, ell);
    ResidueSeries window = *f;
    window.coeffs.resize(static_cast<std::size_t>(ell) * cfg.n_check + 1);
    auto image = hecke(window, ell, weight, psi);
    r.congruence_ok = true;
    for (std::size_t n = 1; n <= cfg.n_check; ++n) {
      if (image.coeffs[n] % p2 != 2 * f->coeffs[n] % p2) {
        r.congruence_ok = false;
        break;
      }
    }
    if (ell <= cfg.N) {
      auto ab = ab_report(cfg, ell);
      r.A_mod_p2 = ab.A_mod_p2;
      r.B_mod_p2 = ab.B_mod_p2;
      r.ab_congruence_ok = ab.ab_congruence_ok;
    }
    if (auto ex = extract_d(cfg, ell)) r.extracted_d = ex->d;
    out[k] = r;
  });
  return out;
}

}  // namespace prat
