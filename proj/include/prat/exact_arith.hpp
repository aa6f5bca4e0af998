#pragma once

// Exact integer/rational arithmetic and elementary number theory.
//
// Big numbers are GMP's mpz_class / mpq_class. Word-sized inputs (primes,
// discriminants, indices) are 64-bit; every routine here is deterministic and
// correct on the full unsigned 64-bit range unless stated otherwise.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prat {

using BigInt = mpz_class;
/// Always canonical: lowest terms, positive denominator, zero is 0/1.
using BigRational = mpq_class;

BigInt to_big(std::int64_t v);
BigInt to_big(std::uint64_t v);

/// num/den reduced to lowest terms. Throws PreconditionError when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

/// "num/den" with den > 0, also for integers ("11/1").
std::string to_string(const BigRational& q);

/// Parses "num/den" or a bare integer. Does not canonicalize: callers that
/// need to reject non-reduced input compare against the canonical form.
std::optional<std::pair<BigInt, BigInt>> parse_fraction(std::string_view text);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Sorted by prime, exponents positive. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

// -- word-sized modular helpers ---------------------------------------------

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a mod m, or nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m);
/// Non-negative representative of a mod m.
std::uint64_t mod_floor(std::int64_t a, std::uint64_t m);
std::uint64_t ipow(std::uint64_t base, unsigned exp);  // no overflow check
std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);
/// Square root of a modulo an odd prime p (Tonelli-Shanks), nullopt if a is a
/// non-residue.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

// -- arithmetic functions ---------------------------------------------------

/// Kronecker symbol (D/n), full extension: (D/0), (D/-1), (D/2) included.
int kronecker(std::int64_t D, std::int64_t n);

int moebius(std::uint64_t n);

/// sigma_s(n) = sum of r^s over positive divisors r of n.
BigInt sigma_pow(unsigned s, std::uint64_t n);

/// Trial division followed by Pollard-Brent with fixed seeds; deterministic.
Factorization factorize(std::uint64_t n);

/// Deterministic Miller-Rabin, certified for every 64-bit input.
bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// D = 1 mod 4 squarefree, or D = 4k with k = 2, 3 mod 4 squarefree. 1 is not
/// fundamental.
bool is_fundamental_discriminant(std::int64_t D);

/// Fundamental discriminant of Q(sqrt(n)) for n != 0 non-square; 1 when n is
/// a perfect square.
std::int64_t field_discriminant(std::int64_t n);

// -- p-adic valuation -------------------------------------------------------

/// Returned by vp() for q = 0.
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

/// Valuation of q at the prime p. Throws PreconditionError if p is not prime.
long vp(const BigRational& q, std::uint64_t p);
long vp(const BigInt& z, std::uint64_t p);

// -- decompositions ---------------------------------------------------------

enum class Parity { even, odd };

inline Parity parity_of(unsigned i) { return i % 2 == 0 ? Parity::even : Parity::odd; }

struct SquarefreeSplit {
  std::int64_t d;   ///< 1 or a fundamental discriminant, sign (-1)^i
  std::uint64_t m;  ///< (-1)^i n = d m^2

  friend bool operator==(const SquarefreeSplit&, const SquarefreeSplit&) = default;
};

/// Writes (-1)^i n = d m^2 with d = 1 (even parity only) or fundamental.
/// nullopt exactly when (-1)^i n = 2, 3 (mod 4).
std::optional<SquarefreeSplit> squarefree_decompose(std::uint64_t n, Parity parity);

struct CornacchiaSolution {
  std::uint64_t a;
  std::uint64_t b;

  friend bool operator==(const CornacchiaSolution&, const CornacchiaSolution&) = default;
};

/// Solves ell = t a^2 + b^2 with a, b > 0 for a prime ell not dividing t.
/// For t = 1 the solution with a <= b is returned.
std::optional<CornacchiaSolution> cornacchia(std::uint64_t t, std::uint64_t ell);

/// a^(p-1) == 1 (mod p^2). Throws PreconditionError if gcd(a, p) != 1.
bool is_wieferich(std::uint64_t p, std::uint64_t a);

/// All ordered signed pairs (x, y) with x^2 + y^2 = n, sorted by (x, y).
std::vector<std::pair<std::int64_t, std::int64_t>> two_square_reps(std::uint64_t n);

}  // namespace prat
