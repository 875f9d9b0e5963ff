#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sunitcount/integer.hpp"

namespace sunit {

/// All primes up to a bound, ascending. primes.size() == pi(bound).
struct PrimeList {
  uint64_t bound = 0;
  std::vector<uint64_t> primes;

  uint64_t count() const { return primes.size(); }
};

/// Sieve of Eratosthenes. bound < 2 is a domain error (empty domain).
PrimeList sieve_primes(uint64_t bound);

/// pi(bound); 0 when bound < 2.
uint64_t prime_pi(uint64_t bound);

bool is_prime(uint64_t n);

/// Exact power of p dividing n. n = 0 has no valuation (domain error);
/// p must be prime.
uint64_t ord_p(const Integer& n, const Integer& p);

/// Prime factorization by trial division against a sieved prime list,
/// ascending. Inputs are desk-scale: n above `limit` (default 10^12) is
/// refused with a GuardLimitError rather than attempted.
std::vector<std::pair<Integer, uint32_t>> factorize(const Integer& n);
std::vector<std::pair<Integer, uint32_t>> factorize(const Integer& n, const Integer& limit);

/// Greatest squarefree divisor of n; rad(1) = 1.
Integer rad(const Integer& n);

/// Number of distinct prime factors of n; omega(1) = 0.
uint32_t omega(const Integer& n);

/// Logarithmic height of a nonzero rational a/b in lowest terms:
/// log max(|a|, |b|). Feeds the bound evaluators only; diagnostic precision.
double height(const Rational& alpha);

}  // namespace sunit
