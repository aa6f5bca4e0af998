#pragma once

// Scan of candidate primes ell = 1 (mod 4 t p^2 prod ell_j^4) for the
// truncated congruence f | T(ell) = 2 f (mod p^2), f = G theta_t, together
// with the checks attached to each candidate:
//
//   c(ell) = A(ell) + B(ell), split by whether y in ell = t x^2 + y is a
//   square; theta_t contributes alpha(0) = 1 and alpha(x) = 2 for x >= 1.

#include <cstdint>
#include <optional>
#include <vector>

#include "prat/cohen.hpp"
#include "prat/qseries.hpp"

namespace prat {

struct ScanConfig {
  std::uint64_t p = 5;
  std::uint64_t t = 5;
  std::vector<std::uint64_t> L;
  std::size_t N = 0;
  unsigned n_check = 8;
  std::uint64_t ell_lo = 0;
  std::uint64_t ell_hi = 0;
  unsigned residue_e = 4;  ///< coefficients kept mod p^residue_e (>= 2)

  /// 4 t p^2 prod ell_j^4.
  std::uint64_t modulus() const;
};

/// Throws PreconditionError unless p >= 5 is prime, t > 1 is a fundamental
/// discriminant, L is valid for p and residue_e >= 2.
void validate(const ScanConfig& cfg);

/// Primes ell in [ell_lo, ell_hi] with ell = 1 (mod cfg.modulus()).
std::vector<std::uint64_t> candidate_primes(const ScanConfig& cfg);

/// G theta_t to precision cfg.N with exact coefficients.
QExpansion build_f(const ScanConfig& cfg);

/// G theta_t mod p^residue_e to precision cfg.N.
ResidueSeries build_f_residue(const ScanConfig& cfg, unsigned jobs = 1,
                              const ProgressFn& progress = {});

struct SerreScanReport {
  std::uint64_t ell = 0;
  bool congruence_ok = false;
  std::optional<CornacchiaSolution> cornacchia;
  bool b_prime = false;
  bool wieferich_ok = false;  ///< p is non-Wieferich to base b (b prime)
  std::uint64_t eps_sigma_b_mod_p2 = 0;
  bool hp_holds = false;
  std::uint64_t A_mod_p2 = 0;
  std::uint64_t B_mod_p2 = 0;
  bool ab_congruence_ok = false;
  std::optional<std::int64_t> extracted_d;
};

/// Fills cornacchia, b_prime, wieferich_ok, eps_sigma_b_mod_p2 and hp_holds.
/// hp_holds means eps_sigma(1, p - 1, b) != 1 (mod p^2).
SerreScanReport hyp_check(std::uint64_t p, std::uint64_t t, std::uint64_t ell);

/// Exact A(ell) and B(ell) from the t x^2 + y enumeration.
struct ABSplit {
  BigRational A;
  BigRational B;
};
ABSplit ab_split(const ScanConfig& cfg, std::uint64_t ell);

struct ABReport {
  std::uint64_t A_mod_p2 = 0;
  std::uint64_t B_mod_p2 = 0;
  bool ab_congruence_ok = false;
};

/// A, B mod p^2. ab_congruence_ok is false only when c(ell) = 2 c(1)
/// (mod p^2) but A != 2 c(1) - B (mod p^2). Throws PrecisionTooSmall when
/// ell > cfg.N.
ABReport ab_report(const ScanConfig& cfg, std::uint64_t ell);

struct ExtractedDiscriminant {
  std::int64_t d = 0;
  std::uint64_t x = 0;
  std::uint64_t y1 = 0;
};

/// First x >= 0 (ascending) with y = ell - t x^2 in N, y not a square and
/// v_p(alpha(x) h1(p - 1, y)) = 1, returned as y = d y1^2 once d is confirmed
/// p-rational by the L-value criterion.
std::optional<ExtractedDiscriminant> extract_d(const ScanConfig& cfg, std::uint64_t ell);

/// One report per candidate prime, in increasing ell. Uses `f` when given
/// (it must be the residue series of cfg), otherwise builds it.
/// Throws PrecisionTooSmall unless cfg.N >= ell_hi * n_check.
std::vector<SerreScanReport> scan_serre(const ScanConfig& cfg,
                                        const ResidueSeries* f = nullptr,
                                        unsigned jobs = 1,
                                        const ProgressFn& progress = {});

}  // namespace prat
