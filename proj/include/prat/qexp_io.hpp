#pragma once

// qexp v1 series cache format.
//
//   #qexp v1
//   #residue <p> <e>        (residue series only)
//   #weight2 <int>
//   #level <int>
//   #charD <int>
//   #prec <int>
//   <n>\t<num>/<den>        one line per nonzero coefficient, n increasing
//
// Residue series write `<n>\t<value>` with 0 < value < p^e. Lines end in
// '\n'. Readers reject unknown versions, indices outside [0, prec], repeated
// or decreasing indices, explicit zeros and fractions not in lowest terms.

#include <filesystem>
#include <iosfwd>

#include "prat/qseries.hpp"

namespace prat {

void write_qexp(std::ostream& out, const QExpansion& f);
QExpansion read_qexp(std::istream& in);

void write_residue_qexp(std::ostream& out, const ResidueSeries& f);
ResidueSeries read_residue_qexp(std::istream& in);

void save_qexp(const std::filesystem::path& path, const QExpansion& f);
QExpansion load_qexp(const std::filesystem::path& path);
void save_residue_qexp(const std::filesystem::path& path, const ResidueSeries& f);
ResidueSeries load_residue_qexp(const std::filesystem::path& path);

}  // namespace prat
