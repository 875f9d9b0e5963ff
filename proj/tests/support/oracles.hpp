// Independent brute-force reference implementations used to derive expected
// values. These deliberately avoid the library's search and index paths: the
// solver oracle loops over (u, v) and divides, smoothness is tested by raw
// trial division, and counting iterates subsets against the solution oracle.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sunitcount/integer.hpp"

namespace oracles {

using sunit::Integer;

inline std::vector<uint64_t> primes_by_trial_division(uint64_t bound) {
  std::vector<uint64_t> out;
  for (uint64_t n = 2; n <= bound; ++n) {
    bool prime = true;
    for (uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

inline bool smooth(Integer n, const std::vector<uint64_t>& primes) {
  for (uint64_t p : primes) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= static_cast<unsigned long>(p);
  }
  return n == 1;
}

inline std::vector<Integer> smooth_values_by_scan(const std::vector<uint64_t>& primes,
                                                  const Integer& cap) {
  std::vector<Integer> out;
  for (Integer n = 1; n <= cap; ++n) {
    if (smooth(n, primes)) out.push_back(n);
  }
  return out;
}

inline uint32_t omega_by_trial_division(Integer n) {
  uint32_t count = 0;
  for (Integer d = 2; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      ++count;
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
    }
  }
  if (n > 1) ++count;
  return count;
}

struct OracleFilters {
  // delta as exact p/q; absent means no filter
  bool has_delta = false;
  Integer delta_num = 0;
  Integer delta_den = 1;
  bool full_rank = false;
};

inline bool pairwise_coprime(const Integer& u, const Integer& v, const Integer& w) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  if (g != 1) return false;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t());
  if (g != 1) return false;
  mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), w.get_mpz_t());
  return g == 1;
}

inline bool delta_holds(const Integer& v, const Integer& u, const Integer& num,
                        const Integer& den) {
  Integer lhs, rhs;
  mpz_pow_ui(lhs.get_mpz_t(), v.get_mpz_t(), mpz_get_ui(den.get_mpz_t()));
  mpz_pow_ui(rhs.get_mpz_t(), u.get_mpz_t(), mpz_get_ui(num.get_mpz_t()));
  return lhs <= rhs;
}

inline uint32_t support_size(const Integer& u, const Integer& v, const Integer& w,
                             const std::vector<uint64_t>& primes) {
  uint32_t n = 0;
  Integer uvw = u * v * w;
  for (uint64_t p : primes) {
    if (mpz_divisible_ui_p(uvw.get_mpz_t(), p)) ++n;
  }
  return n;
}

// All coprime positive solutions of a*u + b*v = c*w with u, v, w smooth over
// `primes` and bounded by cap, sorted by (w, u). Triple loop in spirit: u and
// v are enumerated, w is recovered by division.
inline std::vector<std::array<Integer, 3>> solutions_by_scan(
    const Integer& a, const Integer& b, const Integer& c, const std::vector<uint64_t>& primes,
    const Integer& cap, const OracleFilters& filters = {}) {
  const std::vector<Integer> values = smooth_values_by_scan(primes, cap);
  std::vector<std::array<Integer, 3>> out;
  for (const Integer& u : values) {
    for (const Integer& v : values) {
      Integer lhs = a * u + b * v;
      if (!mpz_divisible_p(lhs.get_mpz_t(), c.get_mpz_t())) continue;
      Integer w = lhs / c;
      if (w > cap || !smooth(w, primes)) continue;
      if (!pairwise_coprime(u, v, w)) continue;
      if (filters.has_delta && !delta_holds(v, u, filters.delta_num, filters.delta_den)) continue;
      if (filters.full_rank && support_size(u, v, w, primes) != primes.size()) continue;
      out.push_back({u, v, w});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x[2] != y[2]) return x[2] < y[2];
    return x[0] < y[0];
  });
  return out;
}

// Deterministic integer in [lo, hi] from a raw 64-bit stream.
inline uint64_t pick(std::mt19937_64& rng, uint64_t lo, uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

}  // namespace oracles
