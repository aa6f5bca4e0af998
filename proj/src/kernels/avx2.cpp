#include "prat/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define PRAT_HAVE_AVX2_BUILD 1
#else
#define PRAT_HAVE_AVX2_BUILD 0
#endif

namespace prat::kernels::avx2 {

#if PRAT_HAVE_AVX2_BUILD

#define PRAT_AVX2 __attribute__((target("avx2")))

PRAT_AVX2 void accumulate_i8(std::span<std::int32_t> dst, std::span<const std::int8_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(src.data() + i));
    __m256i wide = _mm256_cvtepi8_epi32(bytes);
    auto* out = reinterpret_cast<__m256i*>(dst.data() + i);
    _mm256_storeu_si256(out, _mm256_add_epi32(_mm256_loadu_si256(out), wide));
  }
  for (; i < n; ++i) dst[i] += src[i];
}

PRAT_AVX2 std::int64_t dot_i32(std::span<const std::int32_t> a,
                               std::span<const std::int32_t> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    // mul_epi32 uses the low (even) lane of each 64-bit pair.
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vb));
    acc = _mm256_add_epi64(
        acc, _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) sum += static_cast<std::int64_t>(a[i]) * b[i];
  return sum;
}

PRAT_AVX2 void mac_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                       std::uint32_t alpha, std::uint32_t modulus) {
  // The vector path needs dst + alpha * src < 2^31, so it is only taken for
  // moduli below 2^15; the quotient estimate in double is then off by at
  // most one and fixed up below.
  if (modulus >= (1u << 15)) {
    scalar::mac_mod(dst, src, alpha, modulus);
    return;
  }
  const std::size_t n = dst.size();
  std::size_t i = 0;
  const __m256i valpha = _mm256_set1_epi32(static_cast<int>(alpha));
  const __m256i vmod = _mm256_set1_epi32(static_cast<int>(modulus));
  const __m256i vmod_minus1 = _mm256_set1_epi32(static_cast<int>(modulus) - 1);
  const __m256i zero = _mm256_setzero_si256();
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(modulus));
  for (; i + 8 <= n; i += 8) {
    auto* out = reinterpret_cast<__m256i*>(dst.data() + i);
    __m256i d = _mm256_loadu_si256(out);
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, valpha));

    __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(x));
    __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1));
    __m128i qlo = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(lo, inv)));
    __m128i qhi = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(hi, inv)));
    __m256i q = _mm256_set_m128i(qhi, qlo);

    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vmod));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vmod));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vmod_minus1), vmod));
    _mm256_storeu_si256(out, r);
  }
  if (i < n) scalar::mac_mod(dst.subspan(i), src.subspan(i), alpha, modulus);
}

#else

void accumulate_i8(std::span<std::int32_t> dst, std::span<const std::int8_t> src) {
  scalar::accumulate_i8(dst, src);
}
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return scalar::dot_i32(a, b);
}
void mac_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t alpha, std::uint32_t modulus) {
  scalar::mac_mod(dst, src, alpha, modulus);
}

#endif

}  // namespace prat::kernels::avx2
