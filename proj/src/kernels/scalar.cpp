#include "prat/kernels.hpp"

namespace prat::kernels::scalar {

void accumulate_i8(std::span<std::int32_t> dst, std::span<const std::int8_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += static_cast<std::int64_t>(a[i]) * b[i];
  }
  return sum;
}

void mac_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t alpha, std::uint32_t modulus) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    std::uint64_t x = dst[i] + static_cast<std::uint64_t>(alpha) * src[i];
    dst[i] = static_cast<std::uint32_t>(x % modulus);
  }
}

}  // namespace prat::kernels::scalar
