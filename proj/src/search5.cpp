#include "prat/search5.hpp"

#include "prat/cohen.hpp"
#include "prat/dirichlet.hpp"
#include "prat/errors.hpp"

namespace prat {

IdentityEvaluation identity_eval(std::uint64_t n) {
  if (n == 0) throw PreconditionError("invalid_argument", "n must be positive");
  IdentityEvaluation ev;
  ev.n = n;
  ev.lhs = h_coeff(4, n);
  for (std::uint64_t s = 1; s * s <= n; ++s) ev.lhs += 2 * h_coeff(4, n - s * s);

  BigInt div_sum = 0;
  for (auto r : divisors(n)) {
    const int chi = kronecker(-4, static_cast<std::int64_t>(r));
    if (chi == 0) continue;
    BigInt a = to_big(r), b = to_big(n / r);
    BigInt term = a * a * a * a + b * b * b * b;
    if (chi > 0) div_sum += term; else div_sum -= term;
  }
  ev.rhs_divisor_term = make_rational(div_sum, 300);

  BigInt sq_sum = 0;
  for (auto [x, y] : two_square_reps(n)) {
    BigInt x2 = to_big(x) * x, y2 = to_big(y) * y;
    sq_sum += x2 * x2 - 6 * x2 * y2 + y2 * y2;
  }
  ev.rhs_two_square_term = make_rational(sq_sum, 400);
  ev.equal = ev.lhs == ev.rhs_divisor_term + ev.rhs_two_square_term;
  return ev;
}

FoundDiscriminant find_d(std::uint64_t ell, std::uint64_t ell_prime) {
  if (!is_prime(ell) || ell % 4 != 1 || ell == 5) {
    throw PreconditionError("invalid_argument", "ell must be a prime = 1 (mod 4), ell != 5");
  }
  if (!is_prime(ell_prime) || ell_prime % 4 != 3) {
    throw PreconditionError("invalid_argument", "ell' must be a prime = 3 (mod 4)");
  }
  const BigInt q = to_big(ell_prime);
  if (vp(BigInt(1 - q * q * q * q), 5) != 1) {
    throw PreconditionError("invalid_argument", "v_5(1 - ell'^4) must be 1");
  }
  const std::uint64_t n = 2 * ell * ell_prime;
  std::optional<FoundDiscriminant> best;
  for (std::uint64_t x = 1; x * x < n; x += 2) {
    auto split = squarefree_decompose(n - x * x, Parity::even);
    if (!split || split->d == 1 || split->d % 5 == 0) continue;
    if (best && split->d >= best->d) continue;
    auto L = l_neg(4, QuadCharacter(split->d)).value;
    if (vp(L, 5) != 0) continue;
    best = FoundDiscriminant{split->d, static_cast<std::int64_t>(x),
                             static_cast<std::int64_t>(split->m), L};
  }
  if (!best) {
    throw NoWitnessFound("no unit L-value for 2*" + std::to_string(ell) + "*" +
                         std::to_string(ell_prime));
  }
  return *best;
}

std::vector<std::uint64_t> sieve_lemma42(std::span<const std::int64_t> d_list,
                                         std::uint64_t bound) {
  if (bound < 3) throw PreconditionError("invalid_argument", "bound must be at least 3");
  std::vector<std::uint64_t> out;
  for (auto ell : primes_up_to(bound)) {
    if (ell % 4 != 3 || ell % 5 != 1 || ell % 25 == 1) continue;
    bool ok = true;
    for (auto d : d_list) {
      if (kronecker(d, static_cast<std::int64_t>(ell)) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(ell);
  }
  return out;
}

std::optional<NewDiscriminant> next_new_5rational(std::span<const std::int64_t> known,
                                                  std::uint64_t sieve_bound,
                                                  std::uint64_t ellprime_bound) {
  auto sieved = sieve_lemma42(known, sieve_bound);
  if (sieved.empty()) return std::nullopt;
  const std::uint64_t ell = sieved.front();
  for (auto cand : primes_up_to(ellprime_bound)) {
    if (cand % 4 != 1 || cand == 5) continue;
    auto w = find_d(cand, ell);
    return NewDiscriminant{w.d, ell, cand, w};
  }
  return std::nullopt;
}

}  // namespace prat
