#include "ramapoly/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ramapoly {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Wheel mod 30: gaps between candidates coprime to 2, 3, 5.
constexpr unsigned kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic below 2^64 (Sinclair / Jaeschke).
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be >= 1");
  Factorization out;
  auto push = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  push(2);
  push(3);
  push(5);
  std::uint64_t p = 7;
  unsigned wi = 0;
  while (p <= n / p) {
    if (n % p == 0) push(p);
    p += kWheel[wi];
    wi = (wi + 1) & 7;
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

Factorization factorize(const Int& n) { return factorize(checked_u64(n)); }

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::uint64_t totient_from(const Factorization& f) {
  std::uint64_t t = 1;
  for (const auto& [p, a] : f) t *= ipow(p, a - 1) * (p - 1);
  return t;
}

std::uint64_t radical_from(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, a] : f) r *= p;
  return r;
}

int mobius_from(const Factorization& f) {
  for (const auto& [p, a] : f)
    if (a > 1) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors_from(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, a] : f) {
    std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= a; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t n) { return mobius_from(factorize(n)); }

std::uint64_t totient(std::uint64_t n) { return totient_from(factorize(n)); }

std::uint64_t radical(std::uint64_t n) { return radical_from(factorize(n)); }

unsigned omega(std::uint64_t n) {
  return static_cast<unsigned>(factorize(n).size());
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  return divisors_from(factorize(n));
}

Rat fk(std::uint64_t k, std::uint64_t n) {
  if (k == 0) throw std::domain_error("fk: k must be >= 1");
  Rat prod(1);
  for (const auto& [p, a] : factorize(n)) {
    if (k % p != 0) prod *= Rat(Int(p) - 2, Int(p) - 1);
  }
  return prod;
}

}  // namespace ramapoly
