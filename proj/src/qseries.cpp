#include "prat/qseries.hpp"

#include <algorithm>
#include <numeric>

#include "prat/errors.hpp"
#include "prat/kernels.hpp"

namespace prat {

QExpansion::QExpansion(std::vector<BigRational> coeffs, int weight2, std::uint64_t level,
                       QuadCharacter character)
    : coeffs_(std::move(coeffs)), weight2_(weight2), level_(level), character_(character) {
  if (coeffs_.empty()) {
    throw PreconditionError("invalid_argument", "a q-expansion needs at least one coefficient");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

QExpansion QExpansion::zero(std::size_t precision) {
  return QExpansion(std::vector<BigRational>(precision + 1, BigRational(0)));
}

QExpansion QExpansion::with_metadata(int weight2, std::uint64_t level,
                                     QuadCharacter character) const {
  QExpansion out = *this;
  out.weight2_ = weight2;
  out.level_ = level;
  out.character_ = character;
  return out;
}

QExpansion QExpansion::truncated(std::size_t precision) const {
  QExpansion out = *this;
  out.coeffs_.resize(std::min(precision, this->precision()) + 1);
  return out;
}

std::uint64_t ResidueSeries::modulus() const { return ipow(p, e); }

namespace {

QuadCharacter product_character(const QuadCharacter& a, const QuadCharacter& b) {
  if (a.is_trivial()) return b;
  if (b.is_trivial()) return a;
  if (a == b) return QuadCharacter::trivial();
  // chi_a chi_b agrees with the character of Q(sqrt(ab)) away from finitely
  // many primes; good enough for a metadata label.
  return QuadCharacter(field_discriminant(a.discriminant() * b.discriminant()));
}

}  // namespace

QExpansion qs_add(const QExpansion& f, const QExpansion& g) {
  const std::size_t N = std::min(f.precision(), g.precision());
  std::vector<BigRational> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c[n] = f[n] + g[n];
  return QExpansion(std::move(c), f.weight2(), std::lcm(f.level(), g.level()), f.character());
}

QExpansion qs_sub(const QExpansion& f, const QExpansion& g) {
  const std::size_t N = std::min(f.precision(), g.precision());
  std::vector<BigRational> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c[n] = f[n] - g[n];
  return QExpansion(std::move(c), f.weight2(), std::lcm(f.level(), g.level()), f.character());
}

QExpansion qs_scale(const QExpansion& f, const BigRational& k) {
  std::vector<BigRational> c(f.coeffs());
  for (auto& x : c) x *= k;
  return QExpansion(std::move(c), f.weight2(), f.level(), f.character());
}

QExpansion qs_mul(const QExpansion& f, const QExpansion& g) {
  const std::size_t N = std::min(f.precision(), g.precision());
  std::vector<BigRational> c(N + 1, BigRational(0));
  // Iterate over the sparser factor's nonzero entries.
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j <= N; ++j) {
    if (g[j] != 0) support.push_back(j);
  }
  for (std::size_t j : support) {
    for (std::size_t i = 0; i + j <= N; ++i) {
      if (f[i] != 0) c[i + j] += f[i] * g[j];
    }
  }
  return QExpansion(std::move(c), f.weight2() + g.weight2(), std::lcm(f.level(), g.level()),
                    product_character(f.character(), g.character()));
}

QExpansion theta_t(std::uint64_t t, std::size_t precision) {
  if (t == 0) throw PreconditionError("invalid_argument", "theta_t needs t >= 1");
  std::vector<BigRational> c(precision + 1, BigRational(0));
  c[0] = 1;
  for (std::uint64_t n = 1; t * n * n <= precision; ++n) c[t * n * n] = 2;
  return QExpansion(std::move(c), 1, 4 * t,
                    QuadCharacter(field_discriminant(static_cast<std::int64_t>(t))));
}

QExpansion op_B(const QExpansion& f, std::uint64_t m) {
  if (m == 0) throw PreconditionError("invalid_argument", "B_m needs m >= 1");
  std::vector<BigRational> c(f.precision() + 1, BigRational(0));
  for (std::size_t n = 0; n <= f.precision(); n += m) c[n] = f[n];
  return QExpansion(std::move(c), f.weight2(), f.level() * m * m, f.character());
}

QExpansion op_twist(const QExpansion& f, const QuadCharacter& psi) {
  std::vector<BigRational> c(f.precision() + 1, BigRational(0));
  for (std::size_t n = 1; n <= f.precision(); ++n) {
    const int s = psi(static_cast<std::int64_t>(n));
    if (s != 0) c[n] = s > 0 ? f[n] : BigRational(-f[n]);
  }
  const std::uint64_t m = psi.conductor();
  return QExpansion(std::move(c), f.weight2(), f.level() * m * m, f.character());
}

namespace {

void require_odd_prime(std::uint64_t ell) {
  if (ell == 2 || !is_prime(ell)) {
    throw PreconditionError("not_odd_prime", std::to_string(ell) + " is not an odd prime");
  }
}

}  // namespace

QExpansion op_restrict(const QExpansion& f, std::uint64_t ell) {
  require_odd_prime(ell);
  std::vector<BigRational> c(f.precision() + 1, BigRational(0));
  for (std::size_t n = 1; n <= f.precision(); ++n) {
    if (kronecker(static_cast<std::int64_t>(n), static_cast<std::int64_t>(ell)) == 1) c[n] = f[n];
  }
  return QExpansion(std::move(c), f.weight2(), f.level() * ipow(ell, 4), f.character());
}

QExpansion op_restrict_composed(const QExpansion& f, std::uint64_t ell) {
  require_odd_prime(ell);
  const auto signed_ell = static_cast<std::int64_t>(ell);
  const QuadCharacter psi(ell % 4 == 1 ? signed_ell : -signed_ell);
  const QExpansion head = qs_sub(f, op_B(f, ell));
  const BigRational half(1, 2);
  QExpansion out = qs_add(qs_scale(head, half), qs_scale(op_twist(head, psi), half));
  return out.with_metadata(f.weight2(), f.level() * ipow(ell, 4), f.character());
}

QExpansion hecke(const QExpansion& f, std::uint64_t ell, unsigned weight_k,
                 const QuadCharacter& psi) {
  if (!is_prime(ell)) throw PreconditionError("not_prime", "Hecke operator needs a prime");
  if (weight_k == 0) throw PreconditionError("invalid_argument", "weight must be positive");
  if (f.precision() < ell) throw PrecisionTooSmall(ell);
  const std::size_t N = f.precision() / ell;
  BigRational factor(BigInt(psi(static_cast<std::int64_t>(ell))));
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), ell, weight_k - 1);
  factor *= BigRational(power);

  std::vector<BigRational> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    c[n] = f[n * ell];
    if (n % ell == 0) c[n] += factor * f[n / ell];
  }
  return QExpansion(std::move(c), f.weight2(), f.level(), f.character());
}

ResidueSeries hecke(const ResidueSeries& f, std::uint64_t ell, unsigned weight_k,
                    const QuadCharacter& psi) {
  if (!is_prime(ell)) throw PreconditionError("not_prime", "Hecke operator needs a prime");
  if (weight_k == 0) throw PreconditionError("invalid_argument", "weight must be positive");
  if (f.precision() < ell) throw PrecisionTooSmall(ell);
  const std::uint64_t M = f.modulus();
  const std::size_t N = f.precision() / ell;
  const int s = psi(static_cast<std::int64_t>(ell));
  std::uint64_t factor = powmod(ell, weight_k - 1, M);
  if (s < 0) factor = (M - factor) % M;
  if (s == 0) factor = 0;

  ResidueSeries out = f;
  out.coeffs.assign(N + 1, 0);
  for (std::size_t n = 0; n <= N; ++n) {
    std::uint64_t v = f.coeffs[n * ell];
    if (n % ell == 0) v = (v + mulmod(factor, f.coeffs[n / ell], M)) % M;
    out.coeffs[n] = v;
  }
  return out;
}

std::uint64_t reduce_rational(const BigRational& a, std::uint64_t p, unsigned e) {
  const std::uint64_t M = ipow(p, e);
  BigInt den;
  mpz_fdiv_r_ui(den.get_mpz_t(), a.get_den_mpz_t(), M);
  auto inv = invmod(den.get_ui(), M);
  if (!inv) throw DenominatorNotInvertible(0);
  BigInt num;
  mpz_fdiv_r_ui(num.get_mpz_t(), a.get_num_mpz_t(), M);
  return mulmod(num.get_ui(), *inv, M);
}

ResidueSeries reduce_mod(const QExpansion& f, std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw PreconditionError("not_prime", "reduction needs a prime");
  if (e == 0) throw PreconditionError("invalid_argument", "exponent must be positive");
  ResidueSeries out;
  out.p = p;
  out.e = e;
  out.weight2 = f.weight2();
  out.level = f.level();
  out.character_D = f.character().discriminant();
  out.coeffs.resize(f.precision() + 1);
  for (std::size_t n = 0; n <= f.precision(); ++n) {
    if (mpz_divisible_ui_p(f[n].get_den_mpz_t(), p)) throw DenominatorNotInvertible(n);
    out.coeffs[n] = reduce_rational(f[n], p, e);
  }
  return out;
}

ResidueSeries residue_mul_theta(const ResidueSeries& f, std::uint64_t t) {
  if (t == 0) throw PreconditionError("invalid_argument", "theta_t needs t >= 1");
  const std::uint64_t M = f.modulus();
  if (M >= (std::uint64_t{1} << 31)) {
    throw PreconditionError("modulus_too_large", "residue modulus must be below 2^31");
  }
  const std::size_t N = f.precision();
  std::vector<std::uint32_t> src(f.coeffs.begin(), f.coeffs.end());
  std::vector<std::uint32_t> dst(src);  // the theta constant term
  const auto mod32 = static_cast<std::uint32_t>(M);
  const std::uint32_t two = 2 % mod32;
  for (std::uint64_t x = 1; t * x * x <= N; ++x) {
    const std::size_t shift = t * x * x;
    kernels::mac_mod(std::span(dst.data() + shift, N + 1 - shift),
                     std::span<const std::uint32_t>(src.data(), N + 1 - shift), two, mod32);
  }
  ResidueSeries out = f;
  out.coeffs.assign(dst.begin(), dst.end());
  out.weight2 = f.weight2 + 1;
  out.level = std::lcm(f.level, 4 * t);
  const QuadCharacter theta_char(field_discriminant(static_cast<std::int64_t>(t)));
  out.character_D = product_character(QuadCharacter(f.character_D), theta_char).discriminant();
  return out;
}

}  // namespace prat
