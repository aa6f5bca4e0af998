#include <doctest.h>

#include <random>
#include <vector>

#include "prat/errors.hpp"
#include "prat/kernels.hpp"

namespace k = prat::kernels;

TEST_CASE("scalar and avx2 kernels agree") {
  if (!k::avx2_available()) {
    MESSAGE("avx2 not available, equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 300;

    std::vector<std::int8_t> chi(n);
    std::vector<std::int32_t> acc0(n), acc1;
    for (auto& c : chi) c = static_cast<std::int8_t>(static_cast<int>(rng() % 3) - 1);
    for (auto& a : acc0) a = static_cast<std::int32_t>(rng() % 2001) - 1000;
    acc1 = acc0;
    k::scalar::accumulate_i8(acc0, chi);
    k::avx2::accumulate_i8(acc1, chi);
    CHECK(acc0 == acc1);

    std::vector<std::int32_t> a(n), b(n);
    for (auto& x : a) x = static_cast<std::int32_t>(rng() % 2000001) - 1000000;
    for (auto& x : b) x = static_cast<std::int32_t>(rng() % 200001) - 100000;
    CHECK(k::scalar::dot_i32(a, b) == k::avx2::dot_i32(a, b));

    for (std::uint32_t modulus : {25u, 625u, 3125u, 32749u, 32768u, 390625u, 2147483629u}) {
      std::vector<std::uint32_t> dst0(n), src(n);
      for (auto& x : dst0) x = static_cast<std::uint32_t>(rng() % modulus);
      for (auto& x : src) x = static_cast<std::uint32_t>(rng() % modulus);
      auto dst1 = dst0;
      const auto alpha = static_cast<std::uint32_t>(rng() % modulus);
      k::scalar::mac_mod(dst0, src, alpha, modulus);
      k::avx2::mac_mod(dst1, src, alpha, modulus);
      CHECK(dst0 == dst1);
    }
  }
}

TEST_CASE("scalar reference values") {
  std::vector<std::int32_t> acc{1, 2, 3};
  std::vector<std::int8_t> chi{-1, 0, 1};
  k::scalar::accumulate_i8(acc, chi);
  CHECK(acc == std::vector<std::int32_t>{0, 2, 4});
  std::vector<std::int32_t> a{1, -2, 3}, b{4, 5, -6};
  CHECK(k::scalar::dot_i32(a, b) == 4 - 10 - 18);
  std::vector<std::uint32_t> dst{24, 0, 3}, src{24, 24, 1};
  k::scalar::mac_mod(dst, src, 2, 25);
  CHECK(dst == std::vector<std::uint32_t>{22, 23, 5});
}

TEST_CASE("dispatch can be pinned") {
  const auto before = k::active_isa();
  k::force_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  CHECK(k::isa_name(k::Isa::scalar) == "scalar");
  if (k::avx2_available()) {
    k::force_isa(k::Isa::avx2);
    CHECK(k::active_isa() == k::Isa::avx2);
  } else {
    CHECK_THROWS_AS(k::force_isa(k::Isa::avx2), prat::PreconditionError);
  }
  k::force_isa(before);
}
