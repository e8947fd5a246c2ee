#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramapoly/integer.hpp"

namespace ramapoly {

/// Univariate polynomial over the integers, dense, lowest degree first.
/// Canonical form: the highest stored coefficient is nonzero; the zero
/// polynomial is the empty sequence (degree -1).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(Int constant);
  explicit IntPoly(std::vector<Int> coefficients);
  IntPoly(std::initializer_list<Int> coefficients);

  static IntPoly monomial(Int c, std::size_t power);
  /// x^power
  static IntPoly monomial(std::size_t power) { return monomial(Int(1), power); }
  /// x^n - 1
  static IntPoly power_minus_one(std::uint64_t n);
  /// 1 + x^d + x^{2d} + ... + x^{n-d}, which equals (1-x^n)/(1-x^d).
  /// Requires d >= 1 and d | n.
  static IntPoly geometric(std::uint64_t d, std::uint64_t n);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(c_.size()) - 1;
  }
  std::size_t size() const { return c_.size(); }
  const Int& coeff(std::size_t i) const;
  const std::vector<Int>& coefficients() const { return c_; }
  std::size_t nonzero_count() const;

  IntPoly derivative() const;
  /// a(x^m); coefficient i moves to index i*m. Requires m >= 1.
  IntPoly compose_power(std::uint64_t m) const;
  /// a(-x)
  IntPoly negate_var() const;

  Int eval(const Int& x0) const;
  Rat eval(const Rat& x0) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& c, const IntPoly& a);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  struct DivResult;
  /// Long division over the integers. Succeeds when the leading coefficient
  /// of b divides exactly at every step (always the case for b monic up to
  /// sign); returns nullopt when a step is non-integral, which doubles as
  /// the "not exactly divisible over the integers" signal. Throws for b = 0.
  static std::optional<DivResult> divide(const IntPoly& a, const IntPoly& b);

  /// True iff a = b*q for some integer polynomial q.
  static bool divides(const IntPoly& b, const IntPoly& a);

  /// Divides every coefficient by c, throwing std::logic_error if any
  /// coefficient is not a multiple of c.
  IntPoly div_scalar_exact(const Int& c) const;

 private:
  void trim();
  std::vector<Int> c_;
};

struct IntPoly::DivResult {
  IntPoly quotient;
  IntPoly remainder;
};

}  // namespace ramapoly
