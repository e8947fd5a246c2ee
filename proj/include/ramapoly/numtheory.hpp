#pragma once

#include <cstdint>
#include <vector>

#include "ramapoly/integer.hpp"

namespace ramapoly {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Sorted list of (prime, exponent) pairs; empty exactly for n = 1.
using Factorization = std::vector<PrimePower>;

/// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime(std::uint64_t n);

/// Trial division with a 2-3-5 wheel. Throws std::domain_error for n = 0.
Factorization factorize(std::uint64_t n);

/// Arbitrary-precision entry point; inputs >= 2^64 are rejected.
Factorization factorize(const Int& n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t totient_from(const Factorization& f);
std::uint64_t radical_from(const Factorization& f);
int mobius_from(const Factorization& f);
std::vector<std::uint64_t> divisors_from(const Factorization& f);

int mobius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
unsigned omega(std::uint64_t n);

/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// f_k(n) = prod over primes p | n with p not dividing k of (1 - 1/(p-1)).
/// Multiplicative in n; the empty product is 1. Throws for k = 0 or n = 0.
Rat fk(std::uint64_t k, std::uint64_t n);

}  // namespace ramapoly
