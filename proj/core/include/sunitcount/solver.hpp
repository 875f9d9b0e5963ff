#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sunitcount/integer.hpp"
#include "sunitcount/sunits.hpp"

namespace sunit {

/// Coefficient triple (a, b, c) of positive integers with cached radical data.
struct Triple {
  Integer a, b, c;
  uint32_t r = 0;           // omega(a*b*c)
  Integer radical_abc = 1;  // rad(a*b*c)

  static Triple make(Integer a, Integer b, Integer c);

  Integer abc() const { return a * b * c; }
  bool a_plus_b_eq_c() const { return a + b == c; }
  bool all_odd() const;
};

/// A coprime positive solution (u, v, w) of a*u + b*v = c*w over a shared
/// PrimeSet, with full exponent vectors and its support.
struct Solution {
  SUnitValue u, v, w;
  std::vector<uint64_t> support;  // primes dividing u*v*w, ascending

  uint32_t omega_uvw() const { return static_cast<uint32_t>(support.size()); }
};

struct SolveConfig {
  Integer height_cap = 1000000;          // X: max allowed value of each of u, v, w
  std::optional<uint32_t> exponent_cap;  // K: max exponent when present
  std::optional<DeltaBound> delta;       // keep only solutions with v <= u^delta
  bool full_rank = false;                // keep only solutions with omega(uvw) = |S|
};

/// All coprime positive solutions of a*u + b*v = c*w in U_S under cfg,
/// sorted by (w, u) ascending. Every prime of S must be coprime to a*b*c.
/// Deterministic for any worker count.
std::vector<Solution> solve(const Triple& t, const PrimeSet& S, const SolveConfig& cfg,
                            unsigned jobs = 1);

/// First solution in the canonical (w, u) order, if any. Early-exits.
std::optional<Solution> find_witness(const Triple& t, const PrimeSet& S, const SolveConfig& cfg);

inline bool is_solvable(const Triple& t, const PrimeSet& S, const SolveConfig& cfg) {
  return find_witness(t, S, cfg).has_value();
}

/// Divides out the common S-prime content of a solution of a*u + b*v = c*w so
/// it becomes pairwise coprime. Input must satisfy the equation. Idempotent.
std::array<Integer, 3> reduce_to_coprime(const Integer& u, const Integer& v, const Integer& w,
                                         const Triple& t);

}  // namespace sunit
