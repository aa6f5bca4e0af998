#pragma once

// Cohen-Eisenstein series H_i = sum h(i, n) q^n of weight i + 1/2 and the
// series derived from H_{p-1}:
//
//   H1 = p (H_{p-1} - H_{p-1} | B_p),   h1(p-1, n) = p h(p-1, n) for p !| n
//   G  = H1 restricted to N = { n : (n / ell_k) = 1 for every ell_k in L }

#include <cstdint>
#include <span>

#include "prat/parallel.hpp"
#include "prat/qseries.hpp"

namespace prat {

/// zeta(1 - 2i) for n = 0, 0 when (-1)^i n = 2, 3 (mod 4), otherwise
/// L(1 - i, chi_d) eps_sigma(d, i, m) for (-1)^i n = d m^2. Needs i >= 2.
BigRational h_coeff(unsigned i, std::uint64_t n);

QExpansion h_series(unsigned i, std::size_t precision);

/// p h(p-1, n) if p does not divide n, else 0 (n = 0 included). p >= 5 prime.
BigRational h1_coeff(std::uint64_t p, std::uint64_t n);

QExpansion h1_series(std::uint64_t p, std::size_t precision);

/// Throws PreconditionError unless the primes are odd, distinct and != p.
void validate_restriction_primes(std::span<const std::uint64_t> ells, std::uint64_t p);

/// n is in N: (n / ell) = 1 for every ell.
bool in_restriction_set(std::uint64_t n, std::span<const std::uint64_t> ells);

QExpansion g_series(std::uint64_t p, std::span<const std::uint64_t> ells,
                    std::size_t precision);

/// h1(p-1, n) mod p^e through the word-arithmetic L-value path.
std::uint64_t h1_coeff_mod(std::uint64_t p, std::uint64_t n, unsigned e);

/// G mod p^e without materializing exact coefficients. Distinct L-values are
/// computed on up to `jobs` threads; the result does not depend on `jobs`.
ResidueSeries g_residue_series(std::uint64_t p, std::span<const std::uint64_t> ells,
                               std::size_t precision, unsigned e, unsigned jobs = 1,
                               const ProgressFn& progress = {});

}  // namespace prat
