#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "sunitcount/integer.hpp"
#include "sunitcount/solver.hpp"

namespace sunit {

/// Which counting function: subsets with any solution (N), with a solution
/// satisfying v <= u^delta (NDelta), with a full-rank solution (M), or both
/// restrictions (MDelta).
enum class Variant { N, NDelta, M, MDelta };

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
bool variant_has_delta(Variant v);
bool variant_full_rank(Variant v);

struct CountGuards {
  uint64_t max_subsets = 10'000'000;       // naive enumeration refusal threshold
  uint64_t max_family = 4096;              // support-family refusal threshold
  uint64_t strata_scan_limit = 1'000'000;  // supports path: omit strata beyond this
  // supports path: refusal threshold on (smooth values) x (eligible primes),
  // the memory footprint of the all-primes solve index
  uint64_t max_smooth_cells = 50'000'000;
};

struct CountQuery {
  Triple triple;
  uint32_t s = 1;
  uint64_t H = 2;
  Variant variant = Variant::N;
  std::optional<DeltaBound> delta;  // present iff variant is NDelta or MDelta
  SolveConfig cfg;
  CountGuards guards;
};

/// Exact: every eligible subset is either counted (a concrete witness was
/// found) or certified unsolvable independent of the caps. UnderCap: the
/// count is exact for the capped problem and a lower bound for the ideal one.
enum class Exactness { Exact, UnderCap };
const char* exactness_name(Exactness e);

struct CountReport {
  Integer count = 0;
  Exactness exactness = Exactness::UnderCap;
  /// omega(uvw) of each counted subset's canonical witness -> subset count.
  /// The supports algorithm omits strata when the subset space exceeds
  /// guards.strata_scan_limit.
  std::map<uint32_t, Integer> strata;
  uint64_t eligible_primes = 0;
};

/// Primes <= H that do not divide a*b*c.
std::vector<uint64_t> eligible_primes(const Triple& t, uint64_t H);

/// Reference algorithm: iterate every s-subset of the eligible primes and
/// test solvability per subset.
CountReport count_naive(const CountQuery& q, unsigned jobs = 1);

/// Production algorithm for the monotone variants N and NDelta: solve once
/// over all eligible primes, reduce the solution supports to a minimal
/// family, and count covering subsets by inclusion-exclusion.
CountReport count_by_supports(const CountQuery& q, unsigned jobs = 1);

/// Production algorithm for M and MDelta: a full-rank witness forces
/// support = S, so the count is the number of distinct size-s supports.
CountReport count_M_by_supports(const CountQuery& q, unsigned jobs = 1);

/// Exact closed form when one applies: a+b = c with every prime factor of
/// abc at most H, or (a,b,c) = (1,1,1). Absent otherwise.
std::optional<Integer> closed_form_N(const Triple& t, uint32_t s, uint64_t H);

/// Checks N <= N^1_{a,b,c} + N^1_{b,a,c} under identical caps.
bool split_bound_check(const Triple& t, uint32_t s, uint64_t H, const SolveConfig& cfg,
                       const CountGuards& guards = {});

/// Naive-path enumeration of counted subsets for verification suites; fn
/// receives each counted subset (ascending primes) and its canonical witness.
void for_each_counted_subset(
    const CountQuery& q,
    const std::function<void(const std::vector<uint64_t>&, const Solution&)>& fn);

}  // namespace sunit
