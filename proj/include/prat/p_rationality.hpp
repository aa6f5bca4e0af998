#pragma once

// p-rationality of quadratic fields Q(sqrt d).
//
// Real fields (d > 1, p unramified): p-rational exactly when
// v_p(L(2 - p, chi_d)) = 0. Imaginary fields (p >= 5): p not dividing h(d) is
// sufficient; no converse is claimed, so p | h(d) gives `inconclusive`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prat/exact_arith.hpp"
#include "prat/parallel.hpp"

namespace prat {

enum class Verdict { p_rational, not_p_rational, inconclusive, not_applicable };

std::string_view verdict_name(Verdict v);

struct RationalityReport {
  std::int64_t d = 0;
  std::uint64_t p = 0;
  /// L(2 - p, chi_d) for real d; h(d) as h/1 for imaginary d. Absent when p | d.
  std::optional<BigRational> l_value;
  std::optional<long> valuation;
  Verdict verdict = Verdict::not_applicable;
  /// "ok", "p_divides_d" or "p_divides_h".
  std::string reason;
};

RationalityReport is_p_rational_real(std::int64_t d, std::uint64_t p);

RationalityReport is_p_rational_imag_sufficient(std::int64_t d, std::uint64_t p);

/// One report per fundamental discriminant 1 < d <= d_max, in increasing d.
std::vector<RationalityReport> scan_real(std::uint64_t p, std::uint64_t d_max,
                                         unsigned jobs = 1, const ProgressFn& progress = {});

}  // namespace prat
