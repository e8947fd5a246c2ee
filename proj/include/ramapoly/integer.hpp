#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace ramapoly {

/// Arbitrary-precision integer used for all polynomial coefficients.
using Int = boost::multiprecision::cpp_int;

/// Exact fraction, always kept in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Converts an arbitrary-precision natural number into the 64-bit range the
/// arithmetic-function kernels support. Values >= 2^64 are rejected with an
/// explicit error instead of being handled probabilistically.
inline std::uint64_t checked_u64(const Int& n) {
  if (n < 0)
    throw std::domain_error("negative value where a natural number is required");
  if (n > Int(std::numeric_limits<std::uint64_t>::max()))
    throw std::out_of_range("value out of supported range (>= 2^64)");
  return n.convert_to<std::uint64_t>();
}

}  // namespace ramapoly
