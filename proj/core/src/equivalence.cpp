#include "sunitcount/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

namespace sunit {

namespace {

void require_nonzero(const SignedTriple& t, const char* who) {
  for (const Integer& x : t) {
    if (x == 0) throw std::invalid_argument(std::string(who) + ": entries must be nonzero");
  }
}

// n with all S-prime content divided out; n must be positive.
Integer strip_s_part(const Integer& n, const PrimeSet& S) {
  Integer m = n;
  for (uint64_t p : S.primes()) {
    Integer pz(static_cast<unsigned long>(p));
    mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
  }
  return m;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

bool is_rational_s_unit(const Rational& x, const PrimeSet& S) {
  if (x == 0) return false;
  return strip_s_part(abs(x.get_num()), S) == 1 && strip_s_part(x.get_den(), S) == 1;
}

bool is_s_normalized(const SignedTriple& t, const PrimeSet& S) {
  require_nonzero(t, "is_s_normalized");
  if (!(t[0] > 0 && t[0] <= t[1] && t[1] <= t[2])) return false;
  if (!coprime(t[0], t[1]) || !coprime(t[0], t[2]) || !coprime(t[1], t[2])) return false;
  for (const Integer& x : t) {
    if (!S.coprime_to(x)) return false;
  }
  return true;
}

std::optional<EquivalenceWitness> are_s_equivalent(const SignedTriple& t1, const SignedTriple& t2,
                                                   const PrimeSet& S) {
  require_nonzero(t1, "are_s_equivalent");
  require_nonzero(t2, "are_s_equivalent");

  for (const auto& sigma : kPermutations) {
    std::array<Rational, 3> ratio;
    for (int i = 0; i < 3; ++i) {
      ratio[i] = Rational(t2[i]) / Rational(t1[sigma[i]]);
      ratio[i].canonicalize();
    }
    // lambda is the S-free positive part of the first ratio; the S-content
    // and sign are absorbed into the epsilons
    Rational lambda(strip_s_part(abs(ratio[0].get_num()), S),
                    strip_s_part(ratio[0].get_den(), S));
    lambda.canonicalize();

    EquivalenceWitness witness;
    witness.sigma = sigma;
    witness.lambda = lambda;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      witness.epsilons[i] = ratio[i] / lambda;
      witness.epsilons[i].canonicalize();
      ok = is_rational_s_unit(witness.epsilons[i], S);
    }
    if (!ok) continue;
    for (int i = 0; i < 3; ++i) {
      if (Rational(t2[i]) != witness.lambda * witness.epsilons[i] * Rational(t1[sigma[i]])) {
        throw std::logic_error("are_s_equivalent: witness fails to reproduce t2");
      }
    }
    return witness;
  }
  return std::nullopt;
}

std::optional<SignedTriple> try_normalize(const SignedTriple& t, const PrimeSet& S) {
  require_nonzero(t, "try_normalize");
  SignedTriple stripped;
  for (int i = 0; i < 3; ++i) stripped[i] = strip_s_part(abs(t[i]), S);
  Integer g;
  mpz_gcd(g.get_mpz_t(), stripped[0].get_mpz_t(), stripped[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), stripped[2].get_mpz_t());
  for (Integer& x : stripped) x /= g;
  std::sort(stripped.begin(), stripped.end());

  if (!is_s_normalized(stripped, S)) return std::nullopt;
  if (!are_s_equivalent(t, stripped, S)) return std::nullopt;
  return stripped;
}

}  // namespace sunit
