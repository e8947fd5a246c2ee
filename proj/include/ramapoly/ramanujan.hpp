#pragma once

#include <cstdint>
#include <vector>

#include "ramapoly/integer.hpp"

namespace ramapoly {

/// c_n(k) via the Mobius-sum representation: sum over d | gcd(n, k) of
/// d * mu(n/d). Oracle path.
Int c_mobius(std::uint64_t n, std::int64_t k);

/// c_n(k) via Holder's formula phi(n) mu(n/g) / phi(n/g), g = gcd(n, k).
/// The division is always exact; a non-integral reduction indicates a bug
/// and raises std::logic_error. Oracle path.
Int c_holder(std::uint64_t n, std::int64_t k);

/// c_n(k) via multiplicativity in n and the prime-power closed form.
/// Production path.
Int c_multiplicative(std::uint64_t n, std::int64_t k);

/// The full row c_n(0), ..., c_n(n-1).
struct RamanujanRow {
  std::uint64_t modulus = 1;
  std::vector<Int> values;
};

/// Builds the row with c_multiplicative. When cross_check is set, every
/// value is additionally recomputed with c_mobius and c_holder; any
/// disagreement raises std::logic_error naming the offending (n, k).
/// Row invariants (c_n(0) = phi(n), symmetry, zero sum for n > 1) are
/// always asserted.
RamanujanRow row(std::uint64_t n, bool cross_check = true);

}  // namespace ramapoly
