#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sunitcount/bounds.hpp"
#include "sunitcount/ntcore.hpp"

using namespace sunit;

namespace {
constexpr double kRelTol = 1e-12;

bool close(double a, double b) {
  return std::fabs(a - b) <= kRelTol * std::max(std::fabs(a), std::fabs(b));
}
}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("lemma1_envelope substitution values") {
  BoundConstants consts;
  const double l16 = std::log(16.0);
  CHECK(close(lemma1_envelope(1, 16, consts), l16 * l16 * std::log(l16)));
  const double l100 = std::log(100.0);
  CHECK(close(lemma1_envelope(2, 100, consts), l100 * l100 * l100 * std::log(l100)));
  BoundConstants doubled;
  doubled.c0_lemma1 = 2.0;
  CHECK(close(lemma1_envelope(3, 64, doubled), 2.0 * lemma1_envelope(3, 64, consts)));
  CHECK_THROWS_AS(lemma1_envelope(1, 15, consts), std::domain_error);
}

TEST_CASE("lemma2_envelope substitution and monotonicity") {
  BoundConstants consts;
  CHECK(close(lemma2_envelope(97, 97, consts), 1.0));
  CHECK(close(lemma2_envelope(2, 1024, consts), 10.0));
  CHECK_THROWS_AS(lemma2_envelope(101, 97, consts), std::domain_error);
  CHECK_THROWS_AS(lemma2_envelope(1, 97, consts), std::domain_error);

  double prev = lemma2_envelope(2, 1000000, consts);
  for (uint64_t p : sieve_primes(8000).primes) {
    if (p == 2) continue;
    double cur = lemma2_envelope(p, 1000000, consts);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("bw_lower_bound substitution and monotonicity") {
  BoundConstants consts;
  CHECK(close(bw_lower_bound({1.0}, 1, 3.0, consts), -std::log(3.0)));
  CHECK(close(bw_lower_bound({0.5}, 1, 3.0, consts), -std::log(3.0)));  // max{h,1} clamps
  CHECK_THROWS_AS(bw_lower_bound({1.0}, 1, 2.9, consts), std::domain_error);
  CHECK_THROWS_AS(bw_lower_bound({1.0, 2.0}, 1, 3.0, consts), std::invalid_argument);

  double prev = bw_lower_bound({2.0, 3.0}, 2, 3.0, consts);
  for (int i = 1; i <= 1000; ++i) {
    double B = 3.0 + i * 0.5;
    double cur = bw_lower_bound({2.0, 3.0}, 2, B, consts);
    CHECK(cur <= prev);
    prev = cur;
  }
  prev = bw_lower_bound({1.0, 1.0}, 2, 10.0, consts);
  for (int i = 1; i <= 1000; ++i) {
    double h = 1.0 + i * 0.01;
    double cur = bw_lower_bound({h, 1.0}, 2, 10.0, consts);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("evertse_bound") {
  CHECK(evertse_bound(1) == 1029);
  CHECK(evertse_bound(2) == 50421);
  CHECK(evertse_bound(0) == 21);  // degenerate, accepted
}

TEST_CASE("abc_quality") {
  auto r = abc_quality(1, 1, 2);
  CHECK(r.radical == 2);
  CHECK(r.quality == doctest::Approx(1.0).epsilon(1e-12));

  auto r89 = abc_quality(1, 8, 9);
  CHECK(r89.radical == 6);
  CHECK(close(r89.quality, std::log(9.0) / std::log(6.0)));
  CHECK(r89.quality == doctest::Approx(1.2262943).epsilon(1e-6));

  auto big = abc_quality(3, 125, 128);
  CHECK(big.radical == 30);
  CHECK(close(big.quality, std::log(128.0) / std::log(30.0)));
  CHECK(big.quality == doctest::Approx(1.4265653).epsilon(1e-6));

  CHECK(abc_quality(1, 2, 3).quality > 0.0);
  CHECK_THROWS_AS(abc_quality(1, 2, 4), std::invalid_argument);   // a+b != c
  CHECK_THROWS_AS(abc_quality(2, 2, 4), std::invalid_argument);   // not coprime
}

TEST_CASE("theorem envelopes") {
  BoundConstants consts;
  CHECK(close(theorem_envelope(Envelope::PP7, 1, 50, consts), 1.0));
  CHECK(close(theorem_envelope(Envelope::PP7, 1, 4000, consts), 1.0));
  CHECK(close(theorem_envelope(Envelope::PP9, 1, 64, consts), 1.0));  // floor(1/2) = 0
  const double H = 100.0, lH = std::log(100.0), llH = std::log(std::log(100.0));
  CHECK(close(theorem_envelope(Envelope::PP6, 2, 100, consts),
              H * lH * lH * lH * lH * lH * llH * llH));
  CHECK(close(theorem_envelope(Envelope::PP11, 4, 100, consts), (H / lH) * (H / lH)));
  CHECK(close(theorem_envelope(Envelope::PP12, 3, 100, consts), (H / lH) * (H / lH)));
  CHECK(close(theorem_envelope(Envelope::PP10, 3, 100, consts),
              std::pow(H * lH * lH * lH * llH, 2.0)));
  CHECK_THROWS_AS(theorem_envelope(Envelope::PP6, 2, 15, consts), std::domain_error);

  // strictly increasing in the constant
  BoundConstants scaled;
  scaled.theorem_constants["PP6"] = 3.5;
  CHECK(close(theorem_envelope(Envelope::PP6, 2, 100, scaled),
              3.5 * theorem_envelope(Envelope::PP6, 2, 100, consts)));

  // nondecreasing in H on a sweep
  for (Envelope e : {Envelope::PP6, Envelope::PP7, Envelope::PP9, Envelope::PP10, Envelope::PP11,
                     Envelope::PP12}) {
    double prev = 0.0;
    for (uint64_t h = 16; h < 16 + 1000; ++h) {
      double cur = theorem_envelope(e, 3, h, consts);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("envelope names round-trip") {
  for (Envelope e : {Envelope::PP6, Envelope::PP7, Envelope::PP9, Envelope::PP10, Envelope::PP11,
                     Envelope::PP12}) {
    CHECK(parse_envelope(envelope_name(e)) == e);
  }
  CHECK_FALSE(parse_envelope("PP8").has_value());
}

TEST_CASE("empirical exponent audit") {
  auto S = PrimeSet::make({2});
  SolveConfig cfg;
  cfg.height_cap = 16;
  auto t = Triple::make(1, 1, 1);
  auto sols = solve(t, S, cfg);
  REQUIRE(sols.size() == 1);  // (1,1,2)
  auto audit = empirical_exponent_audit(sols, S, 16);
  REQUIRE(audit.per_prime.size() == 1);
  CHECK(audit.per_prime[0].first == 2);
  CHECK(audit.per_prime[0].second == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(*audit.max_stat == doctest::Approx(0.25).epsilon(1e-12));

  // a batch over two primes: finite positive max
  auto S23 = PrimeSet::make({2, 3});
  cfg.height_cap = 10000;
  auto batch = solve(t, S23, cfg);
  REQUIRE_FALSE(batch.empty());
  auto big = empirical_exponent_audit(batch, S23, 10000);
  CHECK(*big.max_stat > 0.0);
  CHECK(std::isfinite(*big.max_stat));

  auto empty = empirical_exponent_audit({}, S, 16);
  CHECK(empty.per_prime.empty());
  CHECK_FALSE(empty.max_stat.has_value());

  // a prime with exponent 0 in every solution scores 0
  auto S57 = PrimeSet::make({5, 7});
  SolveConfig tiny;
  tiny.height_cap = 1;
  auto unit_only = solve(Triple::make(1, 2, 3), S57, tiny);
  REQUIRE(unit_only.size() == 1);  // just (1,1,1)
  auto flat = empirical_exponent_audit(unit_only, S57, 16);
  CHECK(flat.per_prime[0].second == 0.0);
  CHECK(flat.per_prime[1].second == 0.0);
  CHECK(*flat.max_stat == 0.0);
}

}  // TEST_SUITE
