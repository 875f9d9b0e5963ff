#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sunitcount/solver.hpp"
#include "support/oracles.hpp"

using namespace sunit;

namespace {

std::vector<std::array<Integer, 3>> values_of(const std::vector<Solution>& sols) {
  std::vector<std::array<Integer, 3>> out;
  for (const auto& s : sols) out.push_back({s.u.value, s.v.value, s.w.value});
  return out;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("Triple caches omega and radical") {
  auto t = Triple::make(1, 2, 3);
  CHECK(t.r == 2);
  CHECK(t.radical_abc == 6);
  CHECK(t.a_plus_b_eq_c());
  CHECK_FALSE(t.all_odd());
  CHECK(Triple::make(1, 3, 5).all_odd());
  CHECK_THROWS_AS(Triple::make(0, 1, 1), std::invalid_argument);
}

TEST_CASE("powers of two: the only solution of u + v = w up to 100 is (1,1,2)") {
  auto t = Triple::make(1, 1, 1);
  SolveConfig cfg;
  cfg.height_cap = 100;
  auto sols = solve(t, PrimeSet::make({2}), cfg);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].u.value == 1);
  CHECK(sols[0].v.value == 1);
  CHECK(sols[0].w.value == 2);
  CHECK(sols[0].support == std::vector<uint64_t>{2});
  CHECK(sols[0].omega_uvw() == 1);
}

TEST_CASE("a+b=c always has the unit solution") {
  auto t = Triple::make(1, 2, 3);
  SolveConfig cfg;
  cfg.height_cap = 10;
  auto sols = solve(t, PrimeSet::make({5, 7}), cfg);
  bool has_unit = false;
  for (const auto& s : sols) {
    if (s.u.value == 1 && s.v.value == 1 && s.w.value == 1) has_unit = true;
  }
  CHECK(has_unit);
  CHECK(sols.front().omega_uvw() == 0);  // canonical first solution is (1,1,1)
}

TEST_CASE("odd prime sets cannot solve u + v = w") {
  auto t = Triple::make(1, 1, 1);
  SolveConfig cfg;
  cfg.height_cap = 1000;
  CHECK(solve(t, PrimeSet::make({3, 5}), cfg).empty());
  cfg.height_cap = 1000000;
  CHECK_FALSE(is_solvable(t, PrimeSet::make({3}), cfg));
}

TEST_CASE("prime set sharing a factor with abc is rejected") {
  auto t = Triple::make(1, 2, 3);
  SolveConfig cfg;
  CHECK_THROWS_AS(solve(t, PrimeSet::make({2}), cfg), std::invalid_argument);
  CHECK_THROWS_AS(solve(t, PrimeSet::make({5, 3}), cfg), std::invalid_argument);
}

TEST_CASE("find_witness returns the canonical first solution") {
  SolveConfig cfg;
  cfg.height_cap = 10;
  auto w = find_witness(Triple::make(1, 1, 1), PrimeSet::make({2, 3}), cfg);
  REQUIRE(w.has_value());
  CHECK(w->u.value == 1);
  CHECK(w->v.value == 1);
  CHECK(w->w.value == 2);

  cfg.height_cap = 1;
  auto unit = find_witness(Triple::make(1, 2, 3), PrimeSet::make({7}), cfg);
  REQUIRE(unit.has_value());
  CHECK(unit->u.value == 1);
  CHECK(unit->v.value == 1);
  CHECK(unit->w.value == 1);
}

TEST_CASE("solver agrees with the scan oracle on random instances") {
  std::mt19937_64 rng(23);
  const std::vector<std::array<uint64_t, 3>> triples = {
      {1, 1, 1}, {1, 2, 3}, {1, 1, 2}, {3, 5, 16}, {2, 5, 9}, {1, 4, 5}, {5, 7, 11}};
  const std::vector<std::vector<uint64_t>> sets = {
      {2}, {2, 3}, {2, 5}, {3, 5}, {2, 3, 7}, {2, 7, 11}, {3, 5, 7}, {2, 3, 5, 7}};
  int ran = 0;
  while (ran < 30) {
    const auto& tv = triples[oracles::pick(rng, 0, triples.size() - 1)];
    const auto& pv = sets[oracles::pick(rng, 0, sets.size() - 1)];
    Integer abc = Integer(tv[0]) * Integer(tv[1]) * Integer(tv[2]);
    bool ok = true;
    for (uint64_t p : pv) {
      if (mpz_divisible_ui_p(abc.get_mpz_t(), p)) ok = false;
    }
    if (!ok) continue;
    auto t = Triple::make(tv[0], tv[1], tv[2]);
    auto S = PrimeSet::make(pv);
    SolveConfig cfg;
    cfg.height_cap = oracles::pick(rng, 10, 2000);
    auto got = values_of(solve(t, S, cfg));
    auto expected = oracles::solutions_by_scan(t.a, t.b, t.c, pv, cfg.height_cap);
    CHECK(got == expected);
    // the early-exit witness is the head of the full canonical list
    auto witness = find_witness(t, S, cfg);
    CHECK(witness.has_value() == !got.empty());
    if (witness) {
      CHECK(witness->u.value == got.front()[0]);
      CHECK(witness->v.value == got.front()[1]);
      CHECK(witness->w.value == got.front()[2]);
    }
    ++ran;
  }
  CHECK(ran == 30);
}

TEST_CASE("solve is deterministic across worker counts") {
  auto t = Triple::make(1, 1, 1);
  auto S = PrimeSet::make({2, 3, 5});
  SolveConfig cfg;
  cfg.height_cap = 5000;
  auto one = values_of(solve(t, S, cfg, 1));
  CHECK(values_of(solve(t, S, cfg, 4)) == one);
  CHECK(values_of(solve(t, S, cfg, 13)) == one);
}

TEST_CASE("delta filter selects the v <= u subset") {
  auto t = Triple::make(1, 1, 1);
  auto S = PrimeSet::make({2, 3, 5});
  SolveConfig cfg;
  cfg.height_cap = 2000;
  auto all = solve(t, S, cfg);
  cfg.delta = DeltaBound::parse("1");
  auto filtered = solve(t, S, cfg);
  std::vector<std::array<Integer, 3>> expected;
  for (const auto& s : all) {
    if (s.v.value <= s.u.value) expected.push_back({s.u.value, s.v.value, s.w.value});
  }
  CHECK(values_of(filtered) == expected);
}

TEST_CASE("full-rank filter keeps exactly the support = S solutions") {
  auto t = Triple::make(1, 1, 1);
  auto S = PrimeSet::make({2, 3});
  SolveConfig cfg;
  cfg.height_cap = 1000;
  cfg.full_rank = true;
  for (const auto& s : solve(t, S, cfg)) {
    CHECK(s.support == S.primes());
  }
  // 1 + 2 = 3 is full rank over {2,3}
  CHECK_FALSE(solve(t, S, cfg).empty());
}

TEST_CASE("exponent cap equals post-filtering by max exponent") {
  auto t = Triple::make(1, 1, 1);
  auto S = PrimeSet::make({2, 3});
  SolveConfig cfg;
  cfg.height_cap = 500;
  auto all = solve(t, S, cfg);
  cfg.exponent_cap = 2;
  auto capped = values_of(solve(t, S, cfg));
  std::vector<std::array<Integer, 3>> expected;
  for (const auto& s : all) {
    bool ok = true;
    for (auto e : s.u.exponents) ok = ok && e <= 2;
    for (auto e : s.v.exponents) ok = ok && e <= 2;
    for (auto e : s.w.exponents) ok = ok && e <= 2;
    if (ok) expected.push_back({s.u.value, s.v.value, s.w.value});
  }
  CHECK(capped == expected);
}

TEST_CASE("every output satisfies the equation, coprimality and the cap") {
  auto t = Triple::make(3, 5, 16);
  auto S = PrimeSet::make({7, 11, 13});
  SolveConfig cfg;
  cfg.height_cap = 3000;
  for (const auto& s : solve(t, S, cfg)) {
    CHECK(t.a * s.u.value + t.b * s.v.value == t.c * s.w.value);
    CHECK(oracles::pairwise_coprime(s.u.value, s.v.value, s.w.value));
    CHECK(s.u.value <= cfg.height_cap);
    CHECK(s.v.value <= cfg.height_cap);
    CHECK(s.w.value <= cfg.height_cap);
  }
}

TEST_CASE("monotonicity: adding primes never loses solvability") {
  std::mt19937_64 rng(29);
  auto t = Triple::make(1, 1, 1);
  const std::vector<uint64_t> pool = {2, 3, 5, 7, 11, 13, 17, 19};
  for (int i = 0; i < 30; ++i) {
    std::vector<uint64_t> base;
    for (uint64_t p : pool) {
      if (oracles::pick(rng, 0, 1)) base.push_back(p);
    }
    if (base.empty()) base.push_back(2);
    SolveConfig cfg;
    cfg.height_cap = 500;
    if (!is_solvable(t, PrimeSet::make(base), cfg)) continue;
    std::vector<uint64_t> larger = base;
    for (uint64_t p : pool) {
      if (std::find(larger.begin(), larger.end(), p) == larger.end() &&
          oracles::pick(rng, 0, 1)) {
        larger.push_back(p);
      }
    }
    CHECK(is_solvable(t, PrimeSet::make(larger), cfg));
  }
}

TEST_CASE("solution sets are monotone under prime-set inclusion") {
  auto t = Triple::make(1, 1, 1);
  SolveConfig cfg;
  cfg.height_cap = 2000;
  const std::vector<std::vector<uint64_t>> chains = {
      {2}, {2, 3}, {2, 3, 5}, {2, 3, 5, 7}};
  std::vector<std::array<Integer, 3>> previous;
  for (const auto& primes : chains) {
    auto current = values_of(solve(t, PrimeSet::make(primes), cfg));
    for (const auto& sol : previous) {
      CHECK(std::find(current.begin(), current.end(), sol) != current.end());
    }
    previous = std::move(current);
  }
}

TEST_CASE("reduce_to_coprime") {
  auto t = Triple::make(1, 1, 1);
  auto reduced = reduce_to_coprime(2, 2, 4, t);
  CHECK(reduced == std::array<Integer, 3>{1, 1, 2});
  // idempotent on an already coprime solution
  CHECK(reduce_to_coprime(1, 1, 2, t) == std::array<Integer, 3>{1, 1, 2});
  CHECK(reduce_to_coprime(6, 6, 12, t) == std::array<Integer, 3>{1, 1, 2});
  CHECK_THROWS_AS(reduce_to_coprime(1, 1, 3, t), std::invalid_argument);
  CHECK_THROWS_AS(reduce_to_coprime(0, 2, 2, t), std::invalid_argument);
}

}  // TEST_SUITE
