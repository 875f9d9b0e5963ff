#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sunitcount/errors.hpp"
#include "sunitcount/ntcore.hpp"
#include "support/oracles.hpp"

using namespace sunit;

TEST_SUITE("ntcore") {

TEST_CASE("sieve_primes small cases") {
  CHECK(sieve_primes(10).primes == std::vector<uint64_t>{2, 3, 5, 7});
  CHECK(sieve_primes(2).primes == std::vector<uint64_t>{2});
  CHECK(sieve_primes(100).count() == oracles::primes_by_trial_division(100).size());
  CHECK(sieve_primes(100).count() == 25);
  CHECK_THROWS_AS(sieve_primes(1), std::domain_error);
  CHECK_THROWS_AS(sieve_primes(0), std::domain_error);
}

TEST_CASE("sieve agrees with trial division up to 10^4") {
  const auto oracle = oracles::primes_by_trial_division(10000);
  CHECK(sieve_primes(10000).primes == oracle);
  // primes <= H are a prefix of the full list, so spot-check pi at boundaries
  for (uint64_t H : {2ull, 3ull, 4ull, 97ull, 100ull, 997ull, 1000ull, 9973ull, 9999ull}) {
    const auto got = sieve_primes(H).primes;
    size_t expected = 0;
    while (expected < oracle.size() && oracle[expected] <= H) ++expected;
    CHECK(got.size() == expected);
    CHECK(std::equal(got.begin(), got.end(), oracle.begin()));
  }
}

TEST_CASE("ord_p") {
  CHECK(ord_p(54, 3) == 3);
  CHECK(ord_p(7, 2) == 0);
  CHECK(ord_p(pow_ui(Integer(2), 20), 2) == 20);
  CHECK_THROWS_AS(ord_p(0, 2), std::domain_error);
  CHECK_THROWS_AS(ord_p(10, 4), std::invalid_argument);
}

TEST_CASE("rad and omega") {
  CHECK(rad(360) == 30);
  CHECK(rad(1) == 1);
  CHECK(rad(pow_ui(Integer(2), 10)) == 2);
  CHECK(omega(12) == 2);
  CHECK(omega(1) == 0);
  CHECK(omega(30030) == oracles::omega_by_trial_division(30030));
  CHECK(omega(30030) == 6);
}

TEST_CASE("factorize reconstructs n and rad divides n") {
  std::mt19937_64 rng(7);
  std::vector<Integer> samples = {1, 2, 4, 97, 65536, 720720, 999983, 1000000};
  for (int i = 0; i < 400; ++i) samples.push_back(Integer(oracles::pick(rng, 1, 1000000)));
  for (const Integer& n : samples) {
    Integer rebuilt = 1;
    Integer radical = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(ord_p(n, p) == e);
      rebuilt *= pow_ui(p, e);
      radical *= p;
    }
    CHECK(rebuilt == n);
    CHECK(rad(n) == radical);
    CHECK(mpz_divisible_p(n.get_mpz_t(), radical.get_mpz_t()));
    // squarefree: every prime of rad(n) appears once
    CHECK(rad(radical) == radical);
    CHECK(omega(rad(n)) == omega(n));
  }
}

TEST_CASE("factorize guard refuses beyond the trial-division limit") {
  CHECK_THROWS_AS(factorize(Integer("10000000000000000")), GuardLimitError);
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("height") {
  CHECK(height(Rational(1, 1)) == doctest::Approx(0.0));
  CHECK(height(Rational(3, 2)) == doctest::Approx(std::log(3.0)));
  CHECK(height(Rational(2, 7)) == doctest::Approx(std::log(7.0)));
  CHECK(height(Rational(-5, 3)) == doctest::Approx(std::log(5.0)));
  CHECK_THROWS_AS(height(Rational(0)), std::domain_error);
}

TEST_CASE("binomial and log_abs basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  Integer big = pow_ui(Integer(2), 4000);
  CHECK(log_abs(big) == doctest::Approx(4000 * std::log(2.0)).epsilon(1e-12));
}

}  // TEST_SUITE
