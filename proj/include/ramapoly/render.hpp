#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramapoly/family.hpp"
#include "ramapoly/polyring.hpp"
#include "ramapoly/theorems.hpp"

namespace ramapoly {

enum class OutputFormat { Text, Json, Csv };

OutputFormat format_from_name(const std::string& name);

/// Ascending-power form, constant term first: "4 + 2x^2 - 2x^4".
std::string poly_to_text(const IntPoly& p);

/// One table row. TEXT: "R_6(x) = 2 + x - ...". The machine formats list
/// coefficients ascending by exponent: JSON uses the canonical (trimmed)
/// sequence, CSV pads the R/T/V families to their natural length n.
std::string table_row_text(Family f, std::uint64_t n, const IntPoly& p);
std::string table_row_csv(Family f, std::uint64_t n, const IntPoly& p);

std::string render_table(Family f, std::uint64_t n_min, std::uint64_t n_max,
                         OutputFormat fmt, FamilyCache& cache);

std::string render_report(const VerificationReport& rep, OutputFormat fmt);

}  // namespace ramapoly
