#pragma once

// p = 5 constructions: the weight-5/2 divisor-sum identity for
// sum_s h(4, n - s^2), the discriminant finder for 2 ell ell' = x^2 + d y^2,
// the prime sieve and the driver producing a new 5-rational discriminant.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prat/exact_arith.hpp"

namespace prat {

struct IdentityEvaluation {
  std::uint64_t n = 0;
  BigRational lhs;
  BigRational rhs_divisor_term;
  BigRational rhs_two_square_term;
  bool equal = false;
};

/// lhs  = sum_{s in Z, s^2 <= n} h(4, n - s^2)
/// rhs  = (1/300) sum_{r | n} (r^4 + (n/r)^4) (-4/r)
///      + (1/400) sum_{x^2 + y^2 = n} (x^4 - 6 x^2 y^2 + y^4)
IdentityEvaluation identity_eval(std::uint64_t n);

struct FoundDiscriminant {
  std::int64_t d = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  BigRational l_value;  ///< L(-3, chi_d)
};

/// Smallest fundamental d with 5 !| d and v_5(L(-3, chi_d)) = 0 such that
/// 2 ell ell' = x^2 + d y^2 with x odd; ties go to the smaller x.
/// Needs ell = 1 (mod 4), ell' = 3 (mod 4), both prime and != 5, and
/// v_5(1 - ell'^4) = 1. Throws NoWitnessFound if nothing qualifies.
FoundDiscriminant find_d(std::uint64_t ell, std::uint64_t ell_prime);

/// Primes ell <= bound with ell = 3 (mod 4), v_5(1 - ell) = 1 and
/// (d_i / ell) = 1 for every d_i.
std::vector<std::uint64_t> sieve_lemma42(std::span<const std::int64_t> d_list,
                                         std::uint64_t bound);

struct NewDiscriminant {
  std::int64_t d_new = 0;
  std::uint64_t ell = 0;        ///< sieved prime, = 3 (mod 4)
  std::uint64_t ell_second = 0; ///< prime = 1 (mod 4) paired with it
  FoundDiscriminant witness;
};

/// Takes the smallest sieved ell for `known` and the smallest prime
/// ell'' = 1 (mod 4), ell'' != 5, ell'' <= ellprime_bound, and runs
/// find_d(ell'', ell). nullopt when the sieve or the ell'' range is empty.
std::optional<NewDiscriminant> next_new_5rational(std::span<const std::int64_t> known,
                                                  std::uint64_t sieve_bound,
                                                  std::uint64_t ellprime_bound);

}  // namespace prat
