#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace sunit {

/// Arbitrary-precision integer; all solvability logic is exact.
using Integer = mpz_class;
/// Arbitrary-precision rational in canonical form.
using Rational = mpq_class;

Integer pow_ui(const Integer& base, unsigned long exp);

/// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(uint64_t n, uint64_t k);

/// Natural log of |x| without overflow for huge magnitudes. x must be nonzero.
double log_abs(const Integer& x);

/// Checked narrowing; throws std::overflow_error when x does not fit.
uint64_t to_u64(const Integer& x);

inline bool coprime(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g == 1;
}

}  // namespace sunit
