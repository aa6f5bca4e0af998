#include <atomic>
#include <cstdlib>
#include <string>

#include "prat/errors.hpp"
#include "prat/kernels.hpp"

namespace prat::kernels {

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("PRAT_ISA")) {
    std::string value(env);
    if (value == "scalar") return Isa::scalar;
    if (value == "avx2" && avx2_available()) return Isa::avx2;
  }
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_available()) {
    throw PreconditionError("isa_unavailable", "AVX2 is not supported on this CPU");
  }
  current().store(isa, std::memory_order_relaxed);
}

void accumulate_i8(std::span<std::int32_t> dst, std::span<const std::int8_t> src) {
  if (active_isa() == Isa::avx2) {
    avx2::accumulate_i8(dst, src);
  } else {
    scalar::accumulate_i8(dst, src);
  }
}

std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return active_isa() == Isa::avx2 ? avx2::dot_i32(a, b) : scalar::dot_i32(a, b);
}

void mac_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
             std::uint32_t alpha, std::uint32_t modulus) {
  if (active_isa() == Isa::avx2) {
    avx2::mac_mod(dst, src, alpha, modulus);
  } else {
    scalar::mac_mod(dst, src, alpha, modulus);
  }
}

}  // namespace prat::kernels
