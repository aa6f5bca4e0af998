#include "prat/cohen.hpp"

#include <algorithm>
#include <unordered_map>

#include "prat/errors.hpp"

namespace prat {

namespace {

void require_cohen_index(unsigned i) {
  if (i < 2) throw PreconditionError("invalid_argument", "Cohen index must be >= 2");
}

void require_series_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw PreconditionError("not_prime", "p must be a prime >= 5, got " + std::to_string(p));
  }
}

}  // namespace

BigRational h_coeff(unsigned i, std::uint64_t n) {
  require_cohen_index(i);
  if (n == 0) return l_neg(2 * i, QuadCharacter::trivial()).value;
  auto split = squarefree_decompose(n, parity_of(i));
  if (!split) return 0;
  const BigRational L = l_neg(i, QuadCharacter(split->d)).value;
  if (split->m == 1) return L;
  BigRational h = L * BigRational(eps_sigma(split->d, i, split->m));
  h.canonicalize();
  return h;
}

QExpansion h_series(unsigned i, std::size_t precision) {
  require_cohen_index(i);
  std::vector<BigRational> c(precision + 1);
  for (std::size_t n = 0; n <= precision; ++n) c[n] = h_coeff(i, n);
  return QExpansion(std::move(c), static_cast<int>(2 * i + 1), 4);
}

BigRational h1_coeff(std::uint64_t p, std::uint64_t n) {
  require_series_prime(p);
  if (n % p == 0) return 0;
  BigRational h = h_coeff(static_cast<unsigned>(p - 1), n) * p;
  h.canonicalize();
  return h;
}

QExpansion h1_series(std::uint64_t p, std::size_t precision) {
  require_series_prime(p);
  std::vector<BigRational> c(precision + 1);
  for (std::size_t n = 0; n <= precision; ++n) c[n] = h1_coeff(p, n);
  return QExpansion(std::move(c), static_cast<int>(2 * p - 1), 4 * p * p);
}

void validate_restriction_primes(std::span<const std::uint64_t> ells, std::uint64_t p) {
  std::vector<std::uint64_t> seen;
  for (auto ell : ells) {
    if (ell == 2 || !is_prime(ell)) {
      throw PreconditionError("not_odd_prime", std::to_string(ell) + " is not an odd prime");
    }
    if (ell == p) throw PreconditionError("invalid_argument", "restriction prime equals p");
    if (std::find(seen.begin(), seen.end(), ell) != seen.end()) {
      throw PreconditionError("duplicate_prime", "restriction prime " + std::to_string(ell) +
                                                     " listed twice");
    }
    seen.push_back(ell);
  }
}

bool in_restriction_set(std::uint64_t n, std::span<const std::uint64_t> ells) {
  return std::all_of(ells.begin(), ells.end(), [n](std::uint64_t ell) {
    return kronecker(static_cast<std::int64_t>(n % ell), static_cast<std::int64_t>(ell)) == 1;
  });
}

QExpansion g_series(std::uint64_t p, std::span<const std::uint64_t> ells,
                    std::size_t precision) {
  validate_restriction_primes(ells, p);
  QExpansion g = h1_series(p, precision);
  for (auto ell : ells) g = op_restrict(g, ell);
  return g;
}

std::uint64_t h1_coeff_mod(std::uint64_t p, std::uint64_t n, unsigned e) {
  require_series_prime(p);
  const std::uint64_t M = ipow(p, e);
  if (n % p == 0) return 0;
  const unsigned i = static_cast<unsigned>(p - 1);
  auto split = squarefree_decompose(n, Parity::even);
  if (!split) return 0;
  std::uint64_t base;
  if (split->d == 1) {
    base = reduce_rational(l_neg(i, QuadCharacter::trivial()).value * p, p, e);
  } else {
    base = mulmod(p % M, l_neg_mod(i, QuadCharacter(split->d), p, e), M);
  }
  return mulmod(base, eps_sigma_mod(split->d, i, split->m, M), M);
}

ResidueSeries g_residue_series(std::uint64_t p, std::span<const std::uint64_t> ells,
                               std::size_t precision, unsigned e, unsigned jobs,
                               const ProgressFn& progress) {
  require_series_prime(p);
  validate_restriction_primes(ells, p);
  if (e == 0) throw PreconditionError("invalid_argument", "exponent must be positive");
  const std::uint64_t M = ipow(p, e);
  const unsigned i = static_cast<unsigned>(p - 1);

  std::vector<SquarefreeSplit> splits(precision + 1, SquarefreeSplit{0, 0});
  std::vector<std::int64_t> discs;
  for (std::size_t n = 1; n <= precision; ++n) {
    if (n % p == 0 || !in_restriction_set(n, ells)) continue;
    auto split = squarefree_decompose(n, Parity::even);
    if (!split) continue;
    splits[n] = *split;
    if (split->d != 1) discs.push_back(split->d);
  }
  std::sort(discs.begin(), discs.end());
  discs.erase(std::unique(discs.begin(), discs.end()), discs.end());

  std::vector<std::uint64_t> lvals(discs.size());
  parallel_for(
      discs.size(), jobs,
      [&](std::size_t k) { lvals[k] = l_neg_mod(i, QuadCharacter(discs[k]), p, e); }, progress);

  const std::uint64_t unit = reduce_rational(l_neg(i, QuadCharacter::trivial()).value * p, p, e);
  ResidueSeries out;
  out.p = p;
  out.e = e;
  out.weight2 = static_cast<int>(2 * p - 1);
  out.level = 4 * p * p;
  for (auto ell : ells) out.level *= ipow(ell, 4);
  out.coeffs.assign(precision + 1, 0);
  for (std::size_t n = 1; n <= precision; ++n) {
    const auto& s = splits[n];
    if (s.m == 0) continue;
    std::uint64_t base;
    if (s.d == 1) {
      base = unit;
    } else {
      auto k = static_cast<std::size_t>(
          std::lower_bound(discs.begin(), discs.end(), s.d) - discs.begin());
      base = mulmod(p % M, lvals[k], M);
    }
    out.coeffs[n] = mulmod(base, eps_sigma_mod(s.d, i, s.m, M), M);
  }
  return out;
}

}  // namespace prat
