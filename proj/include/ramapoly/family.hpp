#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ramapoly/polyring.hpp"

namespace ramapoly {

enum class Family { Phi, Psi, R, T, V, P, Q };

/// Parses one of "phi", "psi", "r", "t", "v"; throws std::invalid_argument.
Family family_from_name(const std::string& name);
std::string family_symbol(Family f);

/// Memoized constructors for the polynomial families. Not synchronized:
/// either confine an instance to one thread or instantiate per thread.
///
/// With cross_check enabled (the default), each constructor validates its
/// result against an independent route: Phi against the Mobius product of
/// (x^d - 1) factors, Psi against its divisor-sum expansion, and the
/// Ramanujan rows against all three c_n(k) algorithms.
///
/// Indices above cache_cap are computed on demand and not retained, which
/// bounds memory during large sweeps.
class FamilyCache {
 public:
  explicit FamilyCache(bool cross_check = true,
                       std::uint64_t cache_cap = UINT64_MAX)
      : cross_check_(cross_check), cache_cap_(cache_cap) {}

  /// n-th cyclotomic polynomial, by iterated exact division of x^n - 1.
  IntPoly phi(std::uint64_t n);
  /// Sum of x^j over 1 <= j <= n with gcd(j, n) = 1.
  IntPoly psi(std::uint64_t n);
  /// R_n(x) = sum c_n(k) x^k.
  IntPoly r(std::uint64_t n);
  /// T_n(x) = sum |c_n(k)| x^k.
  IntPoly t(std::uint64_t n);
  /// V_n(x) = sum c_n(k)^2 x^k.
  IntPoly v(std::uint64_t n);
  /// P_n(x) = sum_{k=1..n} c_n(k) x^{k-1}.
  IntPoly p(std::uint64_t n);
  /// Q_n(x) = R_n(x) + phi(n) x^n.
  IntPoly q(std::uint64_t n);

  IntPoly get(Family f, std::uint64_t n);

  bool cross_check() const { return cross_check_; }

 private:
  bool cross_check_;
  std::uint64_t cache_cap_;
  std::map<std::uint64_t, IntPoly> phi_, psi_, r_, t_, v_;
};

}  // namespace ramapoly
