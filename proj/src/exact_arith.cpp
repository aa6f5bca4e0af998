#include "prat/exact_arith.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <tuple>

#include "prat/errors.hpp"

namespace prat {

using u128 = unsigned __int128;

BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("zero_denominator", "rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<std::pair<BigInt, BigInt>> parse_fraction(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) return std::nullopt;
  return std::pair{BigInt(std::string(num)), BigInt(std::string(den))};
}

// -- word-sized helpers -----------------------------------------------------

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) return std::nullopt;
  __int128 mm = m;
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::uint64_t mod_floor(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  std::uint64_t r = (static_cast<std::uint64_t>(-(a + 1)) % m);
  return m - 1 - r;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::uint64_t n) {
  auto r = isqrt(n);
  return r * r == n;
}

std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

  std::uint64_t c = powmod(z, q, p);
  std::uint64_t x = powmod(a, (q + 1) / 2, p);
  std::uint64_t t = powmod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    x = mulmod(x, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return x;
}

// -- Kronecker symbol -------------------------------------------------------

namespace {

// Jacobi symbol (a/n) for odd n > 0 and 0 <= a < n.
int jacobi(std::uint64_t a, std::uint64_t n) {
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::uint64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(std::int64_t D, std::int64_t n) {
  if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
  if (D % 2 == 0 && n % 2 == 0) return 0;

  int result = 1;
  std::uint64_t un;
  if (n < 0) {
    un = static_cast<std::uint64_t>(-(n + 1)) + 1;
    if (D < 0) result = -result;
  } else {
    un = static_cast<std::uint64_t>(n);
  }

  unsigned twos = static_cast<unsigned>(__builtin_ctzll(un));
  un >>= twos;
  if (twos % 2 == 1) {
    // D is odd here.
    std::uint64_t r = mod_floor(D, 8);
    if (r == 3 || r == 5) result = -result;
  }
  if (un == 1) return result;
  return result * jacobi(mod_floor(D, un), un);
}

// -- factorization and primality --------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> small = {2,  3,  5,  7,  11, 13,
                                                          17, 19, 23, 29, 31, 37};
  for (auto p : small) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;

  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These twelve bases are a proven witness set for n < 3.3e24.
  for (auto a : small) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, g = 1, q = 1, x = 0, ys = 0;
    std::uint64_t r = 1;
    constexpr std::uint64_t block = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += block;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw PreconditionError("invalid_argument", "factorize(0)");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  static constexpr std::array<std::uint64_t, 8> wheel = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t f = 7;
  for (std::size_t w = 0; f <= 1'000'000 && f * f <= n; f += wheel[w++ % 8]) {
    while (n % f == 0) {
      primes.push_back(f);
      n /= f;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());

  Factorization result;
  for (auto p : primes) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t count = divs.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

BigInt sigma_pow(unsigned s, std::uint64_t n) {
  BigInt result = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (s == 0) {
      result *= e + 1;
      continue;
    }
    BigInt ps;
    mpz_ui_pow_ui(ps.get_mpz_t(), p, s);
    BigInt term = 1, power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= ps;
      term += power;
    }
    result *= term;
  }
  return result;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return false;
  std::uint64_t r = mod_floor(D, 4);
  std::uint64_t a = D < 0 ? static_cast<std::uint64_t>(-D) : static_cast<std::uint64_t>(D);
  auto squarefree = [](std::uint64_t k) {
    for (const auto& pp : factorize(k)) {
      if (pp.exponent > 1) return false;
    }
    return true;
  };
  if (r == 1) return squarefree(a);
  if (r != 0) return false;
  std::int64_t k = D / 4;
  std::uint64_t rk = mod_floor(k, 4);
  return (rk == 2 || rk == 3) && squarefree(a / 4);
}

std::int64_t field_discriminant(std::int64_t n) {
  if (n == 0) throw PreconditionError("invalid_argument", "field_discriminant(0)");
  std::uint64_t a = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  std::int64_t core = 1;
  for (const auto& pp : factorize(a)) {
    if (pp.exponent % 2 == 1) core *= static_cast<std::int64_t>(pp.prime);
  }
  if (n < 0) core = -core;
  if (core == 1) return 1;
  return mod_floor(core, 4) == 1 ? core : 4 * core;
}

// -- valuations -------------------------------------------------------------

long vp(const BigInt& z, std::uint64_t p) {
  if (!is_prime(p)) {
    throw PreconditionError("not_prime", "valuation at non-prime " + std::to_string(p));
  }
  if (z == 0) return kValuationInfinity;
  BigInt rest;
  BigInt bp = to_big(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), bp.get_mpz_t()));
}

long vp(const BigRational& q, std::uint64_t p) {
  if (q == 0) {
    if (!is_prime(p)) {
      throw PreconditionError("not_prime", "valuation at non-prime " + std::to_string(p));
    }
    return kValuationInfinity;
  }
  return vp(q.get_num(), p) - vp(q.get_den(), p);
}

// -- decompositions ---------------------------------------------------------

std::optional<SquarefreeSplit> squarefree_decompose(std::uint64_t n, Parity parity) {
  if (n == 0) throw PreconditionError("invalid_argument", "squarefree_decompose(0)");
  auto signed_n = static_cast<std::int64_t>(n);
  if (parity == Parity::odd) signed_n = -signed_n;
  std::uint64_t r = mod_floor(signed_n, 4);
  if (r == 2 || r == 3) return std::nullopt;

  std::int64_t core = 1;
  std::uint64_t root = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2 == 1) core *= static_cast<std::int64_t>(p);
    root *= ipow(p, e / 2);
  }
  if (parity == Parity::odd) core = -core;
  if (mod_floor(core, 4) == 1) return SquarefreeSplit{core, root};
  return SquarefreeSplit{4 * core, root / 2};
}

std::optional<CornacchiaSolution> cornacchia(std::uint64_t t, std::uint64_t ell) {
  if (t == 0 || !is_prime(ell) || t % ell == 0) {
    throw PreconditionError("invalid_argument",
                            "cornacchia needs t >= 1 and a prime ell not dividing t");
  }
  if (ell == 2) {
    if (t == 1) return CornacchiaSolution{1, 1};
    return std::nullopt;
  }
  if (t >= ell) return std::nullopt;

  auto root = sqrt_mod_prime(ell - t % ell, ell);
  if (!root) return std::nullopt;

  const std::uint64_t limit = isqrt(ell);
  for (std::uint64_t r0 : {*root, ell - *root}) {
    std::uint64_t a = ell, b = r0;
    while (b > limit) {
      std::uint64_t r = a % b;
      a = b;
      b = r;
    }
    std::uint64_t rest = ell - b * b;
    if (b == 0 || rest % t != 0) continue;
    std::uint64_t c = rest / t;
    if (c == 0 || !is_square(c)) continue;
    CornacchiaSolution sol{isqrt(c), b};
    if (t == 1 && sol.a > sol.b) std::swap(sol.a, sol.b);
    return sol;
  }
  return std::nullopt;
}

bool is_wieferich(std::uint64_t p, std::uint64_t a) {
  if (std::gcd(a, p) != 1) {
    throw PreconditionError("not_coprime", "Wieferich test needs gcd(a, p) = 1");
  }
  const std::uint64_t p2 = p * p;
  return powmod(a % p2, p - 1, p2) == 1 % p2;
}

std::vector<std::pair<std::int64_t, std::int64_t>> two_square_reps(std::uint64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> reps;
  const auto r = static_cast<std::int64_t>(isqrt(n));
  for (std::int64_t x = -r; x <= r; ++x) {
    std::uint64_t rest = n - static_cast<std::uint64_t>(x * x);
    if (!is_square(rest)) continue;
    auto y = static_cast<std::int64_t>(isqrt(rest));
    if (y > 0) reps.emplace_back(x, -y);
    reps.emplace_back(x, y);
  }
  return reps;
}

}  // namespace prat
