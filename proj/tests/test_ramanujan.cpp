#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "ramapoly/numtheory.hpp"
#include "ramapoly/ramanujan.hpp"

using namespace ramapoly;

TEST_CASE("spot values") {
  CHECK(c_multiplicative(1, 0) == 1);
  CHECK(c_multiplicative(1, 7) == 1);
  CHECK(c_multiplicative(2, 1) == -1);
  CHECK(c_multiplicative(6, 1) == 1);
  CHECK(c_multiplicative(6, 3) == -2);
  CHECK(c_multiplicative(9, 3) == -3);
  CHECK(c_multiplicative(9, 1) == 0);
  CHECK(c_multiplicative(10, 5) == -4);
  CHECK(c_multiplicative(12, 0) == 4);
  CHECK(c_multiplicative(12, 2) == 2);
  CHECK(c_multiplicative(12, 4) == -2);
  CHECK(c_multiplicative(12, 6) == -4);
  // Prime rows: p - 1 at multiples of p, -1 elsewhere.
  CHECK(c_multiplicative(13, 0) == 12);
  CHECK(c_multiplicative(13, 5) == -1);
  CHECK(c_multiplicative(13, 26) == 12);
}

TEST_CASE("three algorithms agree, including negative and large k") {
  for (std::uint64_t n = 1; n <= 120; ++n)
    for (std::int64_t k = -15; k <= static_cast<std::int64_t>(2 * n) + 3; ++k) {
      Int a = c_multiplicative(n, k);
      CHECK(a == c_mobius(n, k));
      CHECK(a == c_holder(n, k));
    }
}

TEST_CASE("periodicity and reflection in k") {
  for (std::uint64_t n = 1; n <= 80; ++n)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
      Int v = c_multiplicative(n, k);
      CHECK(v == c_multiplicative(n, k + static_cast<std::int64_t>(n)));
      CHECK(v == c_multiplicative(n, -k));
      CHECK(v == c_multiplicative(n, static_cast<std::int64_t>(n) - k));
    }
}

TEST_CASE("multiplicativity in n for coprime moduli") {
  for (std::uint64_t m = 1; m <= 40; ++m)
    for (std::uint64_t n = 1; n <= 40; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (std::int64_t k = 0; k <= 10; ++k)
        CHECK(c_multiplicative(m * n, k) ==
              c_multiplicative(m, k) * c_multiplicative(n, k));
    }
}

TEST_CASE("support: c_n(k) is nonzero iff n / radical(n) divides k") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t step = n / radical(n);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
      bool expected = (static_cast<std::uint64_t>(k) % step == 0);
      CHECK((c_multiplicative(n, k) != 0) == expected);
    }
  }
}

TEST_CASE("row invariants") {
  for (std::uint64_t n = 1; n <= 150; ++n) {
    RamanujanRow rr = row(n);
    REQUIRE(rr.values.size() == n);
    CHECK(rr.modulus == n);
    CHECK(rr.values[0] == Int(totient(n)));
    Int sum = 0;
    for (const auto& v : rr.values) sum += v;
    if (n == 1)
      CHECK(sum == 1);
    else
      CHECK(sum == 0);
    for (std::uint64_t k = 1; k < n; ++k) CHECK(rr.values[k] == rr.values[n - k]);
    for (std::uint64_t k = 0; k < n; ++k)
      CHECK(rr.values[k] ==
            c_multiplicative(n, static_cast<std::int64_t>(k)));
  }
}

TEST_CASE("row without cross-check matches the checked row") {
  for (std::uint64_t n : {1ull, 2ull, 30ull, 64ull, 210ull, 512ull, 900ull}) {
    RamanujanRow a = row(n, true);
    RamanujanRow b = row(n, false);
    CHECK(a.values == b.values);
  }
}

TEST_CASE("value bound |c_n(k)| <= phi(n)") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    Int phi = totient(n);
    RamanujanRow rr = row(n, false);
    for (const auto& v : rr.values) CHECK(abs(v) <= phi);
  }
}
