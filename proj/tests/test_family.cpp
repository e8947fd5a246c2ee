#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "golden_tables.hpp"
#include "ramapoly/family.hpp"
#include "ramapoly/numtheory.hpp"
#include "ramapoly/ramanujan.hpp"

using namespace ramapoly;

namespace {

IntPoly from_row(const std::vector<std::int64_t>& row) {
  std::vector<Int> c(row.begin(), row.end());
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("family name parsing") {
  CHECK(family_from_name("phi") == Family::Phi);
  CHECK(family_from_name("psi") == Family::Psi);
  CHECK(family_from_name("r") == Family::R);
  CHECK(family_from_name("t") == Family::T);
  CHECK(family_from_name("v") == Family::V);
  CHECK_THROWS_AS(family_from_name("p"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_name("R"), std::invalid_argument);
}

TEST_CASE("published R and T tables, 1 through 20") {
  FamilyCache F;
  const auto& rr = golden_r_rows();
  auto tt = golden_t_rows();
  for (std::uint64_t n = 1; n <= 20; ++n) {
    CHECK(F.r(n) == from_row(rr[n - 1]));
    CHECK(F.t(n) == from_row(tt[n - 1]));
  }
}

TEST_CASE("cyclotomic values") {
  FamilyCache F;
  CHECK(F.phi(1) == IntPoly{-1, 1});
  CHECK(F.phi(2) == IntPoly{1, 1});
  CHECK(F.phi(3) == IntPoly{1, 1, 1});
  CHECK(F.phi(4) == IntPoly{1, 0, 1});
  CHECK(F.phi(6) == IntPoly{1, -1, 1});
  CHECK(F.phi(8) == IntPoly{1, 0, 0, 0, 1});
  CHECK(F.phi(12) == IntPoly{1, 0, -1, 0, 1});
  // First index with a coefficient outside {-1, 0, 1}.
  IntPoly p105 = F.phi(105);
  CHECK(p105.coeff(7) == -2);
  CHECK(p105.coeff(41) == -2);
  CHECK(p105.degree() == 48);
}

TEST_CASE("product of Phi_d over d | n equals x^n - 1") {
  FamilyCache F;
  for (std::uint64_t n = 1; n <= 150; ++n) {
    IntPoly prod{1};
    for (std::uint64_t d : divisors(n)) prod = prod * F.phi(d);
    CHECK(prod == IntPoly::power_minus_one(n));
  }
}

TEST_CASE("psi values and invariants") {
  FamilyCache F;
  CHECK(F.psi(1) == IntPoly{0, 1});
  CHECK(F.psi(2) == IntPoly{0, 1});
  CHECK(F.psi(3) == IntPoly{0, 1, 1});
  CHECK(F.psi(4) == IntPoly{0, 1, 0, 1});
  CHECK(F.psi(6) == IntPoly{0, 1, 0, 0, 0, 1});
  for (std::uint64_t n = 1; n <= 200; ++n) {
    IntPoly psi = F.psi(n);
    CHECK(psi.eval(Int(1)) == Int(totient(n)));
    CHECK(psi.coeff(0) == 0);
    for (std::int64_t j = 1; j <= psi.degree(); ++j) {
      bool expected = std::gcd(static_cast<std::uint64_t>(j), n) == 1;
      CHECK((psi.coeff(static_cast<std::uint64_t>(j)) == 1) == expected);
    }
  }
}

TEST_CASE("T equals R with absolute coefficients, V with squares") {
  FamilyCache F;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    IntPoly r = F.r(n), t = F.t(n), v = F.v(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      CHECK(t.coeff(k) == abs(r.coeff(k)));
      CHECK(v.coeff(k) == r.coeff(k) * r.coeff(k));
    }
  }
}

TEST_CASE("closed forms for special indices") {
  FamilyCache F;
  // Prime p: R_p = (p - 1) - x - ... - x^{p-1} + p x^0 form, i.e.
  // c_p(0) = p - 1 and every other coefficient is -1.
  for (std::uint64_t p : {2ull, 3ull, 5ull, 13ull, 97ull}) {
    IntPoly r = F.r(p);
    CHECK(r.coeff(0) == Int(p - 1));
    for (std::uint64_t k = 1; k < p; ++k) CHECK(r.coeff(k) == -1);
  }
  // Prime power p^a: support only at multiples of p^{a-1}.
  IntPoly r8 = F.r(8);
  CHECK(r8 == IntPoly{4, 0, 0, 0, -4});
  IntPoly r9 = F.r(9);
  CHECK(r9 == IntPoly{6, 0, 0, -3, 0, 0, -3});
}

TEST_CASE("radical lifting: R_n(x) = (n/rad(n)) R_rad(n)(x^{n/rad(n)})") {
  FamilyCache F;
  for (std::uint64_t n = 2; n <= 200; ++n) {
    std::uint64_t g = radical(n), s = n / g;
    if (s == 1) continue;
    IntPoly lifted = Int(s) * F.r(g).compose_power(s);
    CHECK(lifted == F.r(n));
  }
}

TEST_CASE("P and Q") {
  FamilyCache F;
  // P_4 = -2x + 2x^3 shifted: c_4(1..4) = 0, -2, 0, 2.
  CHECK(F.p(4) == IntPoly{0, -2, 0, 2});
  CHECK(F.q(2) == IntPoly{1, -1, 1});
  CHECK(F.q(3) == IntPoly{2, -1, -1, 2});
  CHECK(F.q(4) == IntPoly{2, 0, -2, 0, 2});
  for (std::uint64_t n = 1; n <= 200; ++n) {
    Int phi = totient(n);
    IntPoly q = F.q(n);
    CHECK(q == F.r(n) + phi * IntPoly::monomial(n));
    // Palindromic over exponents 0..n since c_n(0) = phi(n) = c_n(n).
    for (std::uint64_t k = 0; k <= n; ++k)
      CHECK(q.coeff(k) == q.coeff(n - k));
    // x P_n(x) = R_n(x) + phi(n) (x^n - 1).
    IntPoly xp = IntPoly::monomial(1) * F.p(n);
    CHECK(xp == F.r(n) + phi * IntPoly::power_minus_one(n));
  }
}

TEST_CASE("get dispatches by family") {
  FamilyCache F;
  for (std::uint64_t n : {1ull, 6ull, 12ull}) {
    CHECK(F.get(Family::Phi, n) == F.phi(n));
    CHECK(F.get(Family::Psi, n) == F.psi(n));
    CHECK(F.get(Family::R, n) == F.r(n));
    CHECK(F.get(Family::T, n) == F.t(n));
    CHECK(F.get(Family::V, n) == F.v(n));
    CHECK(F.get(Family::P, n) == F.p(n));
    CHECK(F.get(Family::Q, n) == F.q(n));
  }
}

TEST_CASE("cache cap keeps results correct") {
  FamilyCache capped(true, 10);
  FamilyCache full;
  for (std::uint64_t n = 1; n <= 40; ++n) {
    CHECK(capped.r(n) == full.r(n));
    CHECK(capped.phi(n) == full.phi(n));
  }
  // Recomputing an uncached index gives the same answer.
  CHECK(capped.r(36) == full.r(36));
}

TEST_CASE("index 0 is rejected") {
  FamilyCache F;
  CHECK_THROWS_AS(F.r(0), std::domain_error);
  CHECK_THROWS_AS(F.phi(0), std::domain_error);
  CHECK_THROWS_AS(F.psi(0), std::domain_error);
}
