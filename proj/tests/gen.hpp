#pragma once

// Hand-rolled generators for property tests. Fixed seeds keep runs
// reproducible.

#include <random>

#include "prat/qseries.hpp"

namespace gen {

/// Random rational num/den, |num| <= 50, den in [1, 12] coprime to `avoid`
/// (0 = no restriction). About a third of the values are zero.
inline prat::BigRational rational(std::mt19937_64& rng, std::uint64_t avoid = 0) {
  if (rng() % 3 == 0) return 0;
  const long num = static_cast<long>(rng() % 101) - 50;
  unsigned long den;
  do {
    den = 1 + rng() % 12;
  } while (avoid != 0 && den % avoid == 0);
  prat::BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline prat::QExpansion series(std::mt19937_64& rng, std::size_t precision,
                               std::uint64_t avoid = 0) {
  std::vector<prat::BigRational> c(precision + 1);
  for (auto& x : c) x = rational(rng, avoid);
  return prat::QExpansion(std::move(c));
}

}  // namespace gen
