#pragma once

#include <array>
#include <optional>

#include "sunitcount/integer.hpp"
#include "sunitcount/sunits.hpp"

namespace sunit {

/// Coefficient triple over the nonzero integers (signed, unlike solver::Triple).
using SignedTriple = std::array<Integer, 3>;

/// Witness for S-equivalence: t2[i] = lambda * epsilons[i] * t1[sigma[i]].
struct EquivalenceWitness {
  std::array<int, 3> sigma;            // permutation of {0, 1, 2}
  Rational lambda;                     // positive, coprime to S
  std::array<Rational, 3> epsilons;    // rational S-units: sign times S-prime powers
};

/// True iff the numerator and denominator of x factor entirely over S
/// (sign is free: the S-unit group contains -1).
bool is_rational_s_unit(const Rational& x, const PrimeSet& S);

/// a, b, c and every prime of S pairwise coprime, and 0 < a <= b <= c.
bool is_s_normalized(const SignedTriple& t, const PrimeSet& S);

/// Equivalence test over the six permutations; no search over lambda is
/// needed since the ratios eliminate it. Returns the witness when equivalent.
std::optional<EquivalenceWitness> are_s_equivalent(const SignedTriple& t1, const SignedTriple& t2,
                                                   const PrimeSet& S);

/// Constructive normalization: strip signs and S-parts, clear the common
/// integer scale, sort ascending, then verify. Partial by design: absent when
/// the construction does not land on an S-normalized representative.
std::optional<SignedTriple> try_normalize(const SignedTriple& t, const PrimeSet& S);

}  // namespace sunit
