#include "ramapoly/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramapoly {

namespace {

const Int kZero = 0;

std::vector<Int> schoolbook(const std::vector<Int>& a,
                            const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, kZero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Int> add_vec(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(std::max(a.size(), b.size()), kZero);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<Int> karatsuba(const std::vector<Int>& a,
                           const std::vector<Int>& b) {
  if (std::min(a.size(), b.size()) <= 32) return schoolbook(a, b);
  std::size_t m = std::max(a.size(), b.size()) / 2;
  auto lo = [m](const std::vector<Int>& v) {
    return std::vector<Int>(v.begin(), v.begin() + std::min(m, v.size()));
  };
  auto hi = [m](const std::vector<Int>& v) {
    return v.size() > m ? std::vector<Int>(v.begin() + m, v.end())
                        : std::vector<Int>{};
  };
  std::vector<Int> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  std::vector<Int> z0 = karatsuba(a0, b0);
  std::vector<Int> z2 =
      (a1.empty() || b1.empty()) ? std::vector<Int>{} : karatsuba(a1, b1);
  std::vector<Int> z1 = karatsuba(add_vec(a0, a1), add_vec(b0, b1));
  std::vector<Int> out(a.size() + b.size() - 1, kZero);
  for (std::size_t i = 0; i < z0.size(); ++i) {
    out[i] += z0[i];
    z1[i] -= z0[i];
  }
  for (std::size_t i = 0; i < z2.size(); ++i) {
    out[i + 2 * m] += z2[i];
    z1[i] -= z2[i];
  }
  for (std::size_t i = 0; i < z1.size(); ++i)
    if (z1[i] != 0) out[i + m] += z1[i];
  return out;
}

}  // namespace

IntPoly::IntPoly(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coefficients) : c_(std::move(coefficients)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<Int> coefficients) : c_(coefficients) {
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Int c, std::size_t power) {
  if (c == 0) return {};
  IntPoly p;
  p.c_.assign(power + 1, kZero);
  p.c_[power] = std::move(c);
  return p;
}

IntPoly IntPoly::power_minus_one(std::uint64_t n) {
  IntPoly p;
  p.c_.assign(n + 1, kZero);
  p.c_[0] = -1;
  p.c_[n] += 1;  // n = 0 yields the zero polynomial
  p.trim();
  return p;
}

IntPoly IntPoly::geometric(std::uint64_t d, std::uint64_t n) {
  if (d == 0 || n % d != 0)
    throw std::domain_error("geometric: requires d >= 1 and d | n");
  IntPoly p;
  p.c_.assign(n - d + 1, kZero);
  for (std::uint64_t i = 0; i + d <= n; i += d) p.c_[i] = 1;
  return p;
}

const Int& IntPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

std::size_t IntPoly::nonzero_count() const {
  std::size_t k = 0;
  for (const Int& c : c_)
    if (c != 0) ++k;
  return k;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  IntPoly p;
  p.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) p.c_[i - 1] = Int(i) * c_[i];
  p.trim();
  return p;
}

IntPoly IntPoly::compose_power(std::uint64_t m) const {
  if (m == 0) throw std::domain_error("compose_power: m must be >= 1");
  if (is_zero() || m == 1) return *this;
  IntPoly p;
  p.c_.assign((c_.size() - 1) * m + 1, kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) p.c_[i * m] = c_[i];
  return p;
}

IntPoly IntPoly::negate_var() const {
  IntPoly p(*this);
  for (std::size_t i = 1; i < p.c_.size(); i += 2) p.c_[i] = -p.c_[i];
  return p;
}

Int IntPoly::eval(const Int& x0) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x0) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly p;
  p.c_ = add_vec(a.c_, b.c_);
  p.trim();
  return p;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly p;
  p.c_.assign(std::max(a.c_.size(), b.c_.size()), kZero);
  for (std::size_t i = 0; i < a.c_.size(); ++i) p.c_[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) p.c_[i] -= b.c_[i];
  p.trim();
  return p;
}

IntPoly IntPoly::operator-() const {
  IntPoly p(*this);
  for (Int& c : p.c_) c = -c;
  return p;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::size_t nza = a.nonzero_count(), nzb = b.nonzero_count();
  IntPoly p;
  bool both_large = a.c_.size() > 32 && b.c_.size() > 32;
  bool dense = 2 * std::min(nza, nzb) > std::min(a.c_.size(), b.c_.size());
  if (both_large && dense) {
    p.c_ = karatsuba(a.c_, b.c_);
  } else {
    // Iterate over the factor with fewer nonzero terms.
    p.c_ = nza <= nzb ? schoolbook(a.c_, b.c_) : schoolbook(b.c_, a.c_);
  }
  p.trim();
  return p;
}

IntPoly operator*(const Int& c, const IntPoly& a) {
  if (c == 0) return {};
  IntPoly p(a);
  for (Int& x : p.c_) x *= c;
  return p;
}

std::optional<IntPoly::DivResult> IntPoly::divide(const IntPoly& a,
                                                  const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide: division by zero polynomial");
  if (a.c_.size() < b.c_.size()) return DivResult{IntPoly{}, a};
  const Int& lead = b.c_.back();
  std::size_t db = b.c_.size() - 1;
  std::vector<Int> rem = a.c_;
  std::vector<Int> quot(a.c_.size() - db, kZero);
  for (std::size_t i = a.c_.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Int t = rem[i] / lead;
    if (t * lead != rem[i]) return std::nullopt;
    quot[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) {
      if (b.c_[j] != 0) rem[i - db + j] -= t * b.c_[j];
    }
  }
  DivResult r;
  r.quotient.c_ = std::move(quot);
  r.quotient.trim();
  r.remainder.c_ = std::move(rem);
  r.remainder.trim();
  return r;
}

bool IntPoly::divides(const IntPoly& b, const IntPoly& a) {
  if (a.is_zero()) return true;
  auto d = divide(a, b);
  return d.has_value() && d->remainder.is_zero();
}

IntPoly IntPoly::div_scalar_exact(const Int& c) const {
  if (c == 0) throw std::domain_error("div_scalar_exact: division by zero");
  IntPoly p(*this);
  for (Int& x : p.c_) {
    Int q = x / c;
    if (q * c != x)
      throw std::logic_error("div_scalar_exact: non-integral coefficient");
    x = std::move(q);
  }
  return p;
}

}  // namespace ramapoly
