#include "ramapoly/family.hpp"

#include <numeric>
#include <stdexcept>

#include "ramapoly/numtheory.hpp"
#include "ramapoly/ramanujan.hpp"

namespace ramapoly {

Family family_from_name(const std::string& name) {
  if (name == "phi") return Family::Phi;
  if (name == "psi") return Family::Psi;
  if (name == "r") return Family::R;
  if (name == "t") return Family::T;
  if (name == "v") return Family::V;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_symbol(Family f) {
  switch (f) {
    case Family::Phi: return "Phi";
    case Family::Psi: return "Psi";
    case Family::R: return "R";
    case Family::T: return "T";
    case Family::V: return "V";
    case Family::P: return "P";
    case Family::Q: return "Q";
  }
  throw std::logic_error("bad family");
}

IntPoly FamilyCache::phi(std::uint64_t n) {
  if (n == 0) throw std::domain_error("phi: n must be >= 1");
  if (auto it = phi_.find(n); it != phi_.end()) return it->second;
  IntPoly result;
  if (n == 1) {
    result = IntPoly{-1, 1};  // x - 1
  } else {
    IntPoly prod(Int(1));
    for (std::uint64_t d : divisors(n)) {
      if (d < n) prod = prod * phi(d);
    }
    auto div = IntPoly::divide(IntPoly::power_minus_one(n), prod);
    if (!div || !div->remainder.is_zero())
      throw std::logic_error("phi: inexact cyclotomic division");
    result = std::move(div->quotient);
  }
  if (cross_check_) {
    // Mobius product route: prod over mu(n/d)=+1 of (x^d - 1) must equal
    // Phi_n times the product over mu(n/d)=-1.
    IntPoly plus(Int(1)), minus(Int(1));
    for (std::uint64_t d : divisors(n)) {
      int mu = mobius(n / d);
      if (mu == 1) plus = plus * IntPoly::power_minus_one(d);
      if (mu == -1) minus = minus * IntPoly::power_minus_one(d);
    }
    if (plus != result * minus)
      throw std::logic_error("phi: Mobius product cross-check failed");
  }
  if (n <= cache_cap_) phi_.emplace(n, result);
  return result;
}

IntPoly FamilyCache::psi(std::uint64_t n) {
  if (n == 0) throw std::domain_error("psi: n must be >= 1");
  if (auto it = psi_.find(n); it != psi_.end()) return it->second;
  std::vector<Int> coeffs(n + 1, Int(0));
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (std::gcd(j, n) == 1) coeffs[j] = 1;
  }
  IntPoly result(std::move(coeffs));
  if (cross_check_) {
    // Divisor-sum route: sum over d | n of mu(d) (x^d + x^{2d} + ... + x^n).
    IntPoly alt;
    for (std::uint64_t d : divisors(n)) {
      int mu = mobius(d);
      if (mu == 0) continue;
      IntPoly block =
          IntPoly::monomial(Int(1), d) * IntPoly::geometric(d, n);
      alt = mu == 1 ? alt + block : alt - block;
    }
    if (alt != result)
      throw std::logic_error("psi: divisor-sum cross-check failed");
  }
  if (n <= cache_cap_) psi_.emplace(n, result);
  return result;
}

IntPoly FamilyCache::r(std::uint64_t n) {
  if (auto it = r_.find(n); it != r_.end()) return it->second;
  IntPoly result(row(n, cross_check_).values);
  if (n <= cache_cap_) r_.emplace(n, result);
  return result;
}

IntPoly FamilyCache::t(std::uint64_t n) {
  if (auto it = t_.find(n); it != t_.end()) return it->second;
  auto values = row(n, cross_check_).values;
  for (Int& v : values) {
    if (v < 0) v = -v;
  }
  IntPoly result(std::move(values));
  if (n <= cache_cap_) t_.emplace(n, result);
  return result;
}

IntPoly FamilyCache::v(std::uint64_t n) {
  if (auto it = v_.find(n); it != v_.end()) return it->second;
  auto values = row(n, cross_check_).values;
  for (Int& x : values) x *= x;
  IntPoly result(std::move(values));
  if (n <= cache_cap_) v_.emplace(n, result);
  return result;
}

IntPoly FamilyCache::p(std::uint64_t n) {
  auto values = row(n, cross_check_).values;
  // P_n(x) = sum_{k=1..n} c_n(k) x^{k-1}, with c_n(n) = c_n(0) = phi(n).
  std::vector<Int> coeffs(n, Int(0));
  for (std::uint64_t k = 1; k < n; ++k) coeffs[k - 1] = values[k];
  coeffs[n - 1] = values[0];
  return IntPoly(std::move(coeffs));
}

IntPoly FamilyCache::q(std::uint64_t n) {
  auto values = row(n, cross_check_).values;
  std::vector<Int> coeffs(n + 1, Int(0));
  for (std::uint64_t k = 0; k < n; ++k) coeffs[k] = values[k];
  coeffs[n] = values[0];  // phi(n)
  return IntPoly(std::move(coeffs));
}

IntPoly FamilyCache::get(Family f, std::uint64_t n) {
  switch (f) {
    case Family::Phi: return phi(n);
    case Family::Psi: return psi(n);
    case Family::R: return r(n);
    case Family::T: return t(n);
    case Family::V: return v(n);
    case Family::P: return p(n);
    case Family::Q: return q(n);
  }
  throw std::logic_error("bad family");
}

}  // namespace ramapoly
