#pragma once

// Quadratic Dirichlet characters and their special values at non-positive
// integers, L(1 - i, chi_D) = -B_{i,chi_D} / i.

#include <cstdint>
#include <vector>

#include "prat/exact_arith.hpp"

namespace prat {

/// The Kronecker character n -> (D/n) of Q(sqrt(D)); D = 1 is the trivial
/// character.
class QuadCharacter {
 public:
  /// Throws PreconditionError unless D == 1 or D is a fundamental discriminant.
  explicit QuadCharacter(std::int64_t D);

  static QuadCharacter trivial() { return QuadCharacter(1); }

  std::int64_t discriminant() const noexcept { return D_; }
  std::uint64_t conductor() const noexcept {
    return static_cast<std::uint64_t>(D_ < 0 ? -D_ : D_);
  }
  bool is_trivial() const noexcept { return D_ == 1; }
  bool is_even() const noexcept { return D_ > 0; }

  int operator()(std::int64_t n) const { return kronecker(D_, n); }

  friend bool operator==(const QuadCharacter&, const QuadCharacter&) = default;

 private:
  std::int64_t D_;
};

/// chi_D(a) for 0 <= a <= length.
std::vector<std::int8_t> character_table(std::int64_t D, std::uint64_t length);

/// Classical B_n, B_1 = -1/2.
BigRational bernoulli(unsigned n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
BigRational bernoulli_poly(unsigned n, const BigRational& x);

/// B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f), f the conductor.
/// The trivial character gives the classical B_n.
BigRational gen_bernoulli(unsigned n, const QuadCharacter& chi);

struct LValue {
  unsigned i;
  std::int64_t D;
  BigRational value;  ///< L(1 - i, chi_D)
};

/// L(1 - i, chi_D). Memoized per (i, D). i = 1 with the trivial character is
/// rejected.
LValue l_neg(unsigned i, const QuadCharacter& chi);

/// L(1 - i, chi_D) mod p^e, computed in word arithmetic. Needs a nontrivial
/// chi with p not dividing D; throws PreconditionError when the value is not
/// p-integral.
std::uint64_t l_neg_mod(unsigned i, const QuadCharacter& chi, std::uint64_t p, unsigned e);

/// Turns the L-value memo on or off and empties it. Results never depend on
/// the setting.
void set_lvalue_cache_enabled(bool enabled);

/// h(d) from L(0, chi_d) = 2 h(d) / w_d.
std::uint64_t class_number_imag(std::int64_t d);

/// sum_{r | m} mu(r) chi_d(r) r^(i-1) sigma_{2i-1}(m/r), where d is the
/// signed discriminant produced by squarefree_decompose (d = 1 allowed).
BigInt eps_sigma(std::int64_t d, unsigned i, std::uint64_t m);

/// eps_sigma(d, i, m) mod modulus via its prime-power factors.
std::uint64_t eps_sigma_mod(std::int64_t d, unsigned i, std::uint64_t m,
                            std::uint64_t modulus);

}  // namespace prat
