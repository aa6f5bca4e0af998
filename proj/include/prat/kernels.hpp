#pragma once

// Data-parallel inner loops of the residue (mod p^e) pipeline.
//
// Every kernel has a portable scalar reference in kernels::scalar and an AVX2
// variant in kernels::avx2. The free functions in kernels:: dispatch to the
// best variant the running CPU supports; the choice is made once, on first
// use, and can be pinned with force_isa() or the PRAT_ISA environment
// variable ("scalar" or "avx2"). Variants are bit-identical on all inputs
// that satisfy the documented preconditions.

#include <cstdint>
#include <span>
#include <string_view>

namespace prat::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True when the CPU (and the build) can run the AVX2 variants.
bool avx2_available();

Isa active_isa();

/// Pins the dispatch target. Requesting avx2 on a CPU without it throws.
void force_isa(Isa isa);

/// dst[i] += src[i]. Sizes must match.
void accumulate_i8(std::span<std::int32_t> dst, std::span<const std::int8_t> src);

/// sum of a[i] * b[i] in 64-bit. Caller guarantees the exact sum fits.
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

/// dst[i] = (dst[i] + alpha * src[i]) mod modulus, with dst[i], src[i], alpha
/// already reduced and modulus < 2^31.
void mac_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t alpha, std::uint32_t modulus);

namespace scalar {
void accumulate_i8(std::span<std::int32_t> dst, std::span<const std::int8_t> src);
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
void mac_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t alpha, std::uint32_t modulus);
}  // namespace scalar

namespace avx2 {
void accumulate_i8(std::span<std::int32_t> dst, std::span<const std::int8_t> src);
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
void mac_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t alpha, std::uint32_t modulus);
}  // namespace avx2

}  // namespace prat::kernels
