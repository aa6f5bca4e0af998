#pragma once

// Truncated q-expansions sum_{n=0}^{N} a(n) q^n with exact rational
// coefficients, plus their images modulo p^e.
//
// Precision contract: no operation invents a coefficient its inputs do not
// determine. Products truncate to the smaller precision and the Hecke
// operator T(ell) contracts precision N to floor(N / ell).
//
// weight2 (twice the weight), level and character are bookkeeping only.

#include <cstdint>
#include <span>
#include <vector>

#include "prat/dirichlet.hpp"
#include "prat/exact_arith.hpp"

namespace prat {

class QExpansion {
 public:
  /// coeffs must be non-empty; precision is coeffs.size() - 1.
  explicit QExpansion(std::vector<BigRational> coeffs, int weight2 = 0,
                      std::uint64_t level = 1,
                      QuadCharacter character = QuadCharacter::trivial());

  static QExpansion zero(std::size_t precision);

  std::size_t precision() const noexcept { return coeffs_.size() - 1; }
  const BigRational& operator[](std::size_t n) const { return coeffs_[n]; }
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

  int weight2() const noexcept { return weight2_; }
  std::uint64_t level() const noexcept { return level_; }
  const QuadCharacter& character() const noexcept { return character_; }

  QExpansion with_metadata(int weight2, std::uint64_t level, QuadCharacter character) const;

  /// First precision + 1 coefficients.
  QExpansion truncated(std::size_t precision) const;

  friend bool operator==(const QExpansion&, const QExpansion&) = default;

 private:
  std::vector<BigRational> coeffs_;
  int weight2_;
  std::uint64_t level_;
  QuadCharacter character_;
};

/// Coefficients reduced into [0, p^e).
struct ResidueSeries {
  std::vector<std::uint64_t> coeffs;
  std::uint64_t p = 0;
  unsigned e = 0;
  int weight2 = 0;
  std::uint64_t level = 1;
  std::int64_t character_D = 1;

  std::uint64_t modulus() const;
  std::size_t precision() const noexcept { return coeffs.size() - 1; }

  friend bool operator==(const ResidueSeries&, const ResidueSeries&) = default;
};

// -- ring operations ----------------------------------------------------------

QExpansion qs_add(const QExpansion& f, const QExpansion& g);
QExpansion qs_sub(const QExpansion& f, const QExpansion& g);
QExpansion qs_scale(const QExpansion& f, const BigRational& c);

/// Cauchy product truncated to min precision; weights add, levels lcm.
QExpansion qs_mul(const QExpansion& f, const QExpansion& g);

/// 1 + 2 sum_{n >= 1} q^(t n^2); weight 1/2, level 4t, character of Q(sqrt t).
QExpansion theta_t(std::uint64_t t, std::size_t precision);

// -- operators ----------------------------------------------------------------

/// sum a(nm) q^(nm): keeps indices divisible by m.
QExpansion op_B(const QExpansion& f, std::uint64_t m);

/// sum_{n >= 1} psi(n) a(n) q^n.
QExpansion op_twist(const QExpansion& f, const QuadCharacter& psi);

/// Keeps the coefficients a(n) with (n / ell) = 1, ell an odd prime.
QExpansion op_restrict(const QExpansion& f, std::uint64_t ell);

/// (1/2)(f - f|B_ell) + (1/2)(f - f|B_ell)_psi with psi = (. / ell) realized as
/// the character of discriminant ell* = (-1)^((ell-1)/2) ell. Agrees with
/// op_restrict; kept as an independent route.
QExpansion op_restrict_composed(const QExpansion& f, std::uint64_t ell);

/// Weight-k Hecke operator T(ell) with character psi:
/// c'(n) = c(n ell) + psi(ell) ell^(k-1) c(n / ell), second term only when
/// ell | n (n = 0 included). Output precision floor(N / ell).
QExpansion hecke(const QExpansion& f, std::uint64_t ell, unsigned weight_k,
                 const QuadCharacter& psi);

ResidueSeries hecke(const ResidueSeries& f, std::uint64_t ell, unsigned weight_k,
                    const QuadCharacter& psi);

/// Coefficient-wise image mod p^e. Throws DenominatorNotInvertible naming the
/// first index whose denominator p divides.
ResidueSeries reduce_mod(const QExpansion& f, std::uint64_t p, unsigned e);

/// a mod p^e for a single p-integral rational.
std::uint64_t reduce_rational(const BigRational& a, std::uint64_t p, unsigned e);

/// f * theta_t mod p^e, computed with the dispatched mac_mod kernel.
ResidueSeries residue_mul_theta(const ResidueSeries& f, std::uint64_t t);

}  // namespace prat
