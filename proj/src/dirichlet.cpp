#include "prat/dirichlet.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "prat/errors.hpp"
#include "prat/kernels.hpp"

namespace prat {

QuadCharacter::QuadCharacter(std::int64_t D) : D_(D) {
  if (D != 1 && !is_fundamental_discriminant(D)) {
    throw PreconditionError("not_fundamental",
                            std::to_string(D) + " is not a fundamental discriminant");
  }
}

namespace {

// chi_D splits into local characters: (. / q) for each odd prime q | D and
// one of chi_-4, chi_8, chi_-8 for the 2-part. Each is a short periodic
// table, and chi_D(a) is the product of the entries at a mod period.
std::vector<std::vector<std::int8_t>> local_characters(std::int64_t D) {
  std::vector<std::vector<std::int8_t>> parts;
  std::uint64_t f = static_cast<std::uint64_t>(D < 0 ? -D : D);
  std::int64_t odd_part_sign = 1;  // product of the q* = (-1)^((q-1)/2) q signs
  for (auto [q, e] : factorize(f)) {
    if (q == 2) continue;
    std::vector<std::int8_t> t(q, -1);
    t[0] = 0;
    for (std::uint64_t x = 1; x <= q / 2; ++x) t[x * x % q] = 1;
    parts.push_back(std::move(t));
    if (q % 4 == 3) odd_part_sign = -odd_part_sign;
  }
  if (f % 4 == 0) {
    const std::int64_t two_part = D / static_cast<std::int64_t>(f >> (f % 8 == 0 ? 3 : 2)) *
                                  odd_part_sign;
    if (two_part == -4) parts.push_back({0, 1, 0, -1});
    else if (two_part == 8) parts.push_back({0, 1, 0, -1, 0, -1, 0, 1});
    else parts.push_back({0, 1, 0, 1, 0, -1, 0, -1});
  }
  return parts;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow_big(std::uint64_t base, unsigned exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// S_j = sum_{a=1}^{f} chi(a) a^j for j = 0..n.
std::vector<BigInt> power_sums(const std::vector<std::int8_t>& chi, std::uint64_t f,
                               unsigned n) {
  std::vector<BigInt> sums(n + 1, 0);
  const double bits = (n + 1) * std::log2(static_cast<double>(f) + 1.0);
  if (bits < 122.0) {
    std::vector<__int128> acc(n + 1, 0);
    for (std::uint64_t a = 1; a <= f; ++a) {
      const int c = chi[a];
      if (c == 0) continue;
      __int128 pw = 1;
      for (unsigned j = 0; j <= n; ++j) {
        acc[j] += c > 0 ? pw : -pw;
        pw *= static_cast<__int128>(a);
      }
    }
    for (unsigned j = 0; j <= n; ++j) {
      // mpz has no __int128 constructor; split into two 64-bit halves.
      __int128 v = acc[j];
      bool neg = v < 0;
      unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                                : static_cast<unsigned __int128>(v);
      BigInt hi = to_big(static_cast<std::uint64_t>(u >> 64));
      BigInt lo = to_big(static_cast<std::uint64_t>(u));
      sums[j] = (hi << 64) + lo;
      if (neg) sums[j] = -sums[j];
    }
    return sums;
  }
  for (std::uint64_t a = 1; a <= f; ++a) {
    const int c = chi[a];
    if (c == 0) continue;
    BigInt pw = 1;
    BigInt ba = to_big(a);
    for (unsigned j = 0; j <= n; ++j) {
      if (c > 0) {
        sums[j] += pw;
      } else {
        sums[j] -= pw;
      }
      pw *= ba;
    }
  }
  return sums;
}

struct LValueCache {
  std::shared_mutex mu;
  bool enabled = true;
  std::map<std::pair<unsigned, std::int64_t>, BigRational> exact;
  std::map<std::tuple<unsigned, std::int64_t, std::uint64_t, unsigned>, std::uint64_t> modular;
};

LValueCache& lvalue_cache() {
  static LValueCache cache;
  return cache;
}

}  // namespace

std::vector<std::int8_t> character_table(std::int64_t D, std::uint64_t length) {
  if (D != 1 && !is_fundamental_discriminant(D)) {
    throw PreconditionError("not_fundamental",
                            std::to_string(D) + " is not a fundamental discriminant");
  }
  std::vector<std::int8_t> chi(length + 1, 1);
  if (D == 1) return chi;
  for (const auto& part : local_characters(D)) {
    const std::size_t period = part.size();
    std::size_t r = 0;
    for (std::uint64_t a = 0; a <= length; ++a) {
      chi[a] = static_cast<std::int8_t>(chi[a] * part[r]);
      if (++r == period) r = 0;
    }
  }
  return chi;
}

BigRational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<BigRational> cache{BigRational(1)};
  std::lock_guard lock(mu);
  while (cache.size() <= n) {
    const auto m = static_cast<unsigned>(cache.size());
    BigRational sum = 0;
    for (unsigned k = 0; k < m; ++k) sum += BigRational(binomial(m + 1, k)) * cache[k];
    BigRational next = -sum / (m + 1);
    next.canonicalize();
    cache.push_back(next);
  }
  return cache[n];
}

BigRational bernoulli_poly(unsigned n, const BigRational& x) {
  BigRational result = 0;
  BigRational xp = 1;  // x^(n-k), built from k = n downwards
  for (unsigned k = n + 1; k-- > 0;) {
    result += BigRational(binomial(n, k)) * bernoulli(k) * xp;
    xp *= x;
  }
  result.canonicalize();
  return result;
}

BigRational gen_bernoulli(unsigned n, const QuadCharacter& chi) {
  if (chi.is_trivial()) return bernoulli(n);
  const std::uint64_t f = chi.conductor();
  const auto table = character_table(chi.discriminant(), f);
  const auto sums = power_sums(table, f, n);

  // f^(n-1) sum_a chi(a) B_n(a/f) = (1/f) sum_k C(n,k) B_k f^k S_{n-k}
  BigRational total = 0;
  BigInt fk = 1;
  const BigInt bf = to_big(f);
  for (unsigned k = 0; k <= n; ++k) {
    total += BigRational(binomial(n, k) * fk * sums[n - k]) * bernoulli(k);
    fk *= bf;
  }
  total /= BigRational(bf);
  total.canonicalize();
  return total;
}

void set_lvalue_cache_enabled(bool enabled) {
  auto& cache = lvalue_cache();
  std::unique_lock lock(cache.mu);
  cache.enabled = enabled;
  cache.exact.clear();
  cache.modular.clear();
}

LValue l_neg(unsigned i, const QuadCharacter& chi) {
  if (i == 0) throw PreconditionError("invalid_argument", "L(1 - i) needs i >= 1");
  if (i == 1 && chi.is_trivial()) {
    throw PreconditionError("zeta_zero", "zeta(0) is not supported");
  }
  auto& cache = lvalue_cache();
  const auto key = std::pair{i, chi.discriminant()};
  {
    std::shared_lock lock(cache.mu);
    if (cache.enabled) {
      if (auto it = cache.exact.find(key); it != cache.exact.end()) {
        return {i, chi.discriminant(), it->second};
      }
    }
  }
  BigRational value = -gen_bernoulli(i, chi) / i;
  value.canonicalize();
  {
    std::unique_lock lock(cache.mu);
    if (cache.enabled) cache.exact.emplace(key, value);
  }
  return {i, chi.discriminant(), value};
}

std::uint64_t l_neg_mod(unsigned i, const QuadCharacter& chi, std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw PreconditionError("not_prime", "modulus base must be prime");
  if (chi.is_trivial() || chi.conductor() % p == 0) {
    throw PreconditionError("invalid_argument",
                            "modular L-value needs a nontrivial character with p not "
                            "dividing D");
  }
  if (i == 0 || e == 0) throw PreconditionError("invalid_argument", "need i >= 1, e >= 1");

  auto& cache = lvalue_cache();
  const auto key = std::tuple{i, chi.discriminant(), p, e};
  {
    std::shared_lock lock(cache.mu);
    if (cache.enabled) {
      if (auto it = cache.modular.find(key); it != cache.modular.end()) return it->second;
    }
  }

  const unsigned n = i;
  const std::uint64_t f = chi.conductor();

  // X = f * Dn * B_{n,chi} = sum_k C(n,k) (Dn B_k) f^k S_{n-k} is an integer,
  // Dn = lcm of the denominators of B_0..B_n. L = -X / (f Dn n).
  BigInt dn = 1;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_lcm(dn.get_mpz_t(), dn.get_mpz_t(), bernoulli(k).get_den_mpz_t());
  }
  const auto shift = static_cast<unsigned>(vp(dn, p) + vp(to_big(std::uint64_t{n}), p));
  const unsigned total_exp = e + shift;
  BigInt big_mod = pow_big(p, total_exp);
  if (big_mod >= BigInt(1UL << 62)) {
    throw PreconditionError("modulus_too_large", "p^e too large for word arithmetic");
  }
  const std::uint64_t M = big_mod.get_ui();

  const auto chi_values = character_table(chi.discriminant(), f);
  std::vector<std::uint64_t> sums(n + 1, 0);
  const bool bucketed = f >= M && M < (1ULL << 24) &&
                        static_cast<double>(M) * static_cast<double>(f + M) < 4.0e18;
  if (bucketed) {
    // Fold chi into residue classes mod M, then dot against r^j mod M.
    std::vector<std::int32_t> counts(M, 0);
    for (std::uint64_t start = 0; start <= f; start += M) {
      const std::uint64_t len = std::min<std::uint64_t>(M, f + 1 - start);
      kernels::accumulate_i8(std::span(counts.data(), len),
                             std::span(chi_values.data() + start, len));
    }
    std::vector<std::int32_t> powers(M, 1);
    for (unsigned j = 0; j <= n; ++j) {
      if (j > 0) {
        for (std::uint64_t r = 0; r < M; ++r) {
          powers[r] = static_cast<std::int32_t>(mulmod(static_cast<std::uint64_t>(powers[r]), r, M));
        }
      }
      std::int64_t dot = kernels::dot_i32(counts, powers);
      sums[j] = mod_floor(dot, M);
    }
  } else {
    for (std::uint64_t a = 1; a <= f; ++a) {
      const int c = chi_values[a];
      if (c == 0) continue;
      std::uint64_t pw = 1 % M;
      const std::uint64_t am = a % M;
      for (unsigned j = 0; j <= n; ++j) {
        sums[j] = c > 0 ? (sums[j] + pw) % M : (sums[j] + M - pw) % M;
        pw = mulmod(pw, am, M);
      }
    }
  }

  std::uint64_t X = 0;
  std::uint64_t fk = 1 % M;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt coeff = binomial(n, k) * BigInt(dn * bernoulli(k).get_num() / bernoulli(k).get_den());
    BigInt reduced;
    mpz_fdiv_r_ui(reduced.get_mpz_t(), coeff.get_mpz_t(), M);
    std::uint64_t term = mulmod(mulmod(reduced.get_ui(), fk, M), sums[n - k], M);
    X = (X + term) % M;
    fk = mulmod(fk, f % M, M);
  }

  const std::uint64_t p_shift = ipow(p, shift);
  if (X % p_shift != 0) {
    throw PreconditionError("not_p_integral", "L-value is not p-integral");
  }
  const std::uint64_t target = ipow(p, e);
  const std::uint64_t x_red = (X / p_shift) % target;

  // Unit part of f * Dn * n.
  BigInt unit = to_big(f) * dn * n;
  BigInt bp = to_big(p);
  mpz_remove(unit.get_mpz_t(), unit.get_mpz_t(), bp.get_mpz_t());
  BigInt unit_red;
  mpz_fdiv_r_ui(unit_red.get_mpz_t(), unit.get_mpz_t(), target);
  const std::uint64_t inv = *invmod(unit_red.get_ui(), target);
  const std::uint64_t value = (target - mulmod(x_red, inv, target)) % target;

  {
    std::unique_lock lock(cache.mu);
    if (cache.enabled) cache.modular.emplace(key, value);
  }
  return value;
}

std::uint64_t class_number_imag(std::int64_t d) {
  if (d >= 0 || !is_fundamental_discriminant(d)) {
    throw PreconditionError("not_fundamental",
                            std::to_string(d) + " is not a negative fundamental discriminant");
  }
  const std::uint64_t w = d == -3 ? 6 : d == -4 ? 4 : 2;
  BigRational h = l_neg(1, QuadCharacter(d)).value * w / 2;
  h.canonicalize();
  if (h.get_den() != 1 || h <= 0) {
    throw NoWitnessFound("class number came out as " + to_string(h));
  }
  return h.get_num().get_ui();
}

BigInt eps_sigma(std::int64_t d, unsigned i, std::uint64_t m) {
  if (i == 0 || m == 0) throw PreconditionError("invalid_argument", "eps_sigma needs i, m >= 1");
  BigInt total = 0;
  for (std::uint64_t r : divisors(m)) {
    const int mu = moebius(r);
    if (mu == 0) continue;
    const int c = kronecker(d, static_cast<std::int64_t>(r));
    if (c == 0) continue;
    BigInt term = pow_big(r, i - 1) * sigma_pow(2 * i - 1, m / r);
    if (mu * c > 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

std::uint64_t eps_sigma_mod(std::int64_t d, unsigned i, std::uint64_t m,
                            std::uint64_t modulus) {
  if (i == 0 || m == 0) throw PreconditionError("invalid_argument", "eps_sigma needs i, m >= 1");
  std::uint64_t result = 1 % modulus;
  for (const auto& [q, k] : factorize(m)) {
    // sigma(q^k) - chi(q) q^(i-1) sigma(q^(k-1))
    const std::uint64_t qs = powmod(q, 2 * i - 1, modulus);
    std::uint64_t sigma_prev = 0, sigma_cur = 1 % modulus;
    for (unsigned j = 1; j <= k; ++j) {
      sigma_prev = sigma_cur;
      sigma_cur = (1 + mulmod(qs, sigma_cur, modulus)) % modulus;
    }
    const int c = kronecker(d, static_cast<std::int64_t>(q));
    const std::uint64_t sub = mulmod(powmod(q, i - 1, modulus), sigma_prev, modulus);
    std::uint64_t factor = sigma_cur;
    if (c > 0) factor = (factor + modulus - sub) % modulus;
    if (c < 0) factor = (factor + sub) % modulus;
    result = mulmod(result, factor, modulus);
  }
  return result;
}

}  // namespace prat
