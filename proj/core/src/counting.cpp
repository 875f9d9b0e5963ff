#include "sunitcount/counting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "solver_internal.hpp"
#include "sunitcount/detail/parallel.hpp"
#include "sunitcount/errors.hpp"
#include "sunitcount/ntcore.hpp"

namespace sunit {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::N: return "N";
    case Variant::NDelta: return "Ndelta";
    case Variant::M: return "M";
    case Variant::MDelta: return "Mdelta";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "N") return Variant::N;
  if (name == "Ndelta") return Variant::NDelta;
  if (name == "M") return Variant::M;
  if (name == "Mdelta") return Variant::MDelta;
  return std::nullopt;
}

bool variant_has_delta(Variant v) { return v == Variant::NDelta || v == Variant::MDelta; }
bool variant_full_rank(Variant v) { return v == Variant::M || v == Variant::MDelta; }

const char* exactness_name(Exactness e) { return e == Exactness::Exact ? "exact" : "under-cap"; }

std::vector<uint64_t> eligible_primes(const Triple& t, uint64_t H) {
  std::vector<uint64_t> out;
  if (H < 2) return out;
  Integer abc = t.abc();
  for (uint64_t p : sieve_primes(H).primes) {
    if (!mpz_divisible_ui_p(abc.get_mpz_t(), p)) out.push_back(p);
  }
  return out;
}

namespace {

void validate_query(const CountQuery& q) {
  if (q.s < 1) throw std::invalid_argument("count: s must be >= 1");
  if (q.H < 2) throw std::invalid_argument("count: H must be >= 2");
  if (variant_has_delta(q.variant) != q.delta.has_value()) {
    throw std::invalid_argument("count: delta must be present exactly for the delta variants");
  }
}

SolveConfig effective_cfg(const CountQuery& q) {
  SolveConfig cfg = q.cfg;
  cfg.delta = variant_has_delta(q.variant) ? q.delta : std::nullopt;
  cfg.full_rank = variant_full_rank(q.variant);
  return cfg;
}

// Subsets missing the prime 2 are unsolvable when a, b, c are all odd: with
// only odd primes in S, a*u + b*v - c*w is odd and cannot vanish. This is the
// one cap-independent unsolvability certificate the engine knows.
Integer parity_certified_count(const Triple& t, uint64_t E, uint32_t s) {
  if (!t.all_odd() || E == 0) return 0;
  return binomial(E - 1, s);  // subsets drawn from eligible \ {2}
}

Exactness classify_exactness(const Integer& counted, const Integer& certified,
                             const Integer& total) {
  return counted + certified == total ? Exactness::Exact : Exactness::UnderCap;
}

// ---- lexicographic s-subset enumeration over [0, E) ----

std::vector<uint32_t> first_combination(uint32_t s) {
  std::vector<uint32_t> idx(s);
  for (uint32_t i = 0; i < s; ++i) idx[i] = i;
  return idx;
}

bool next_combination(std::vector<uint32_t>& idx, uint64_t E) {
  const size_t s = idx.size();
  size_t i = s;
  while (i > 0) {
    --i;
    if (idx[i] != E - s + i) {
      ++idx[i];
      for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<uint32_t> unrank_combination(uint64_t rank, uint64_t E, uint32_t s) {
  std::vector<uint32_t> idx(s);
  uint64_t x = 0;
  for (uint32_t i = 0; i < s; ++i) {
    while (true) {
      uint64_t block = to_u64(binomial(E - 1 - x, s - 1 - i));
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    idx[i] = static_cast<uint32_t>(x);
    ++x;
  }
  return idx;
}

struct NaiveAccum {
  Integer counted = 0;
  Integer certified = 0;
  std::map<uint32_t, Integer> strata;
};

// ---- support-family machinery ----

using IndexSet = std::vector<uint32_t>;  // ascending indices into the eligible primes

bool subset_of(const IndexSet& a, const IndexSet& b) {
  size_t j = 0;
  for (uint32_t x : a) {
    while (j < b.size() && b[j] < x) ++j;
    if (j == b.size() || b[j] != x) return false;
    ++j;
  }
  return true;
}

IndexSet merge_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Distinct supports of size <= s in canonical first-occurrence order; the
// solutions arrive sorted by (w, u), so position k holds the support whose
// earliest witness comes k-th.
std::vector<IndexSet> distinct_supports(const std::vector<Solution>& sols,
                                        const std::vector<uint64_t>& eligible, uint32_t s,
                                        uint64_t max_family) {
  std::set<IndexSet> seen;
  std::vector<IndexSet> ordered;
  for (const Solution& sol : sols) {
    if (sol.support.size() > s) continue;
    IndexSet key;
    key.reserve(sol.support.size());
    for (uint64_t p : sol.support) {
      auto it = std::lower_bound(eligible.begin(), eligible.end(), p);
      key.push_back(static_cast<uint32_t>(it - eligible.begin()));
    }
    if (seen.insert(key).second) {
      ordered.push_back(std::move(key));
      if (ordered.size() > max_family) {
        throw GuardLimitError("count_by_supports: support family exceeds the limit " +
                              std::to_string(max_family));
      }
    }
  }
  return ordered;
}

std::vector<IndexSet> minimal_family(const std::vector<IndexSet>& supports) {
  std::vector<IndexSet> out;
  for (size_t i = 0; i < supports.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < supports.size() && minimal; ++j) {
      if (j == i) continue;
      if (supports[j].size() < supports[i].size() && subset_of(supports[j], supports[i])) {
        minimal = false;
      }
    }
    if (minimal) out.push_back(supports[i]);
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Number of s-subsets of [0, E) containing at least one family member, by
// inclusion-exclusion over unions. Branches whose union already exceeds s
// contribute binomials of zero and only grow deeper, so they are pruned.
Integer covering_subsets(const std::vector<IndexSet>& family, uint64_t E, uint32_t s) {
  Integer total = 0;
  auto dfs = [&](auto&& self, size_t start, const IndexSet& unioned, int sign) -> void {
    for (size_t j = start; j < family.size(); ++j) {
      IndexSet u2 = merge_union(unioned, family[j]);
      if (u2.size() > s) continue;
      Integer term = binomial(E - u2.size(), s - u2.size());
      if (sign > 0) {
        total += term;
      } else {
        total -= term;
      }
      self(self, j + 1, u2, -sign);
    }
  };
  dfs(dfs, 0, IndexSet{}, +1);
  return total;
}

// The supports algorithms solve once over every eligible prime; the size of
// that index is guarded so oversized queries refuse predictably instead of
// exhausting memory.
std::vector<Solution> solve_all_eligible(const CountQuery& q, const SolveConfig& cfg,
                                         const std::vector<uint64_t>& eligible, unsigned jobs) {
  const PrimeSet all = PrimeSet::make(eligible);
  const uint64_t value_cap =
      std::max<uint64_t>(1, q.guards.max_smooth_cells / std::max<size_t>(1, eligible.size()));
  std::vector<SUnitValue> smooth;
  try {
    smooth = enumerate_sunits(all, cfg.height_cap, cfg.exponent_cap, value_cap);
  } catch (const GuardLimitError&) {
    throw GuardLimitError("count: the all-primes smooth index exceeds the limit of " +
                          std::to_string(q.guards.max_smooth_cells) + " cells");
  }
  return detail::solve_indexed(q.triple, all, smooth, cfg, jobs);
}

// Strata via the canonical witness: each counted subset is attributed to the
// first support (in canonical order) it contains, whose size is the witness's
// omega(uvw).
std::map<uint32_t, Integer> strata_by_first_cover(const std::vector<IndexSet>& ordered,
                                                  uint64_t E, uint32_t s, uint64_t total) {
  std::map<uint32_t, Integer> strata;
  std::vector<uint32_t> idx = first_combination(s);
  for (uint64_t rank = 0; rank < total; ++rank) {
    for (const IndexSet& d : ordered) {
      if (subset_of(d, idx)) {
        strata[static_cast<uint32_t>(d.size())] += 1;
        break;
      }
    }
    if (rank + 1 < total) next_combination(idx, E);
  }
  return strata;
}

}  // namespace

CountReport count_naive(const CountQuery& q, unsigned jobs) {
  validate_query(q);
  const std::vector<uint64_t> eligible = eligible_primes(q.triple, q.H);
  const uint64_t E = eligible.size();
  const Integer total = binomial(E, q.s);

  CountReport report;
  report.eligible_primes = E;
  if (total == 0) {
    report.exactness = Exactness::Exact;
    return report;
  }
  if (total > Integer(static_cast<unsigned long>(q.guards.max_subsets))) {
    throw GuardLimitError("count_naive: " + total.get_str() + " subsets exceed the limit " +
                          std::to_string(q.guards.max_subsets));
  }

  const SolveConfig cfg = effective_cfg(q);
  const bool parity = q.triple.all_odd();
  const uint64_t total_u = to_u64(total);

  const unsigned workers = jobs == 0 ? 1 : jobs;
  std::vector<NaiveAccum> acc(workers);
  detail::run_chunked(total_u, jobs, [&](size_t chunk, size_t begin, size_t end) {
    NaiveAccum& a = acc[chunk];
    std::vector<uint32_t> idx = unrank_combination(begin, E, q.s);
    std::vector<uint64_t> primes(q.s);
    for (uint64_t rank = begin; rank < end; ++rank) {
      for (uint32_t i = 0; i < q.s; ++i) primes[i] = eligible[idx[i]];
      PrimeSet S = PrimeSet::make(primes);
      auto witness = find_witness(q.triple, S, cfg);
      if (witness) {
        if (parity && primes[0] != 2) {
          throw std::logic_error("count_naive: parity law violated");
        }
        a.counted += 1;
        a.strata[witness->omega_uvw()] += 1;
      } else if (parity && primes[0] != 2) {
        a.certified += 1;
      }
      if (rank + 1 < end) next_combination(idx, E);
    }
  });

  Integer counted = 0, certified = 0;
  for (const NaiveAccum& a : acc) {
    counted += a.counted;
    certified += a.certified;
    for (const auto& [t, n] : a.strata) report.strata[t] += n;
  }
  report.count = counted;
  report.exactness = classify_exactness(counted, certified, total);
  return report;
}

CountReport count_by_supports(const CountQuery& q, unsigned jobs) {
  validate_query(q);
  if (variant_full_rank(q.variant)) {
    throw std::invalid_argument("count_by_supports: full-rank variants need count_M_by_supports");
  }
  const std::vector<uint64_t> eligible = eligible_primes(q.triple, q.H);
  const uint64_t E = eligible.size();
  const Integer total = binomial(E, q.s);

  CountReport report;
  report.eligible_primes = E;
  if (total == 0) {
    report.exactness = Exactness::Exact;
    return report;
  }

  const SolveConfig cfg = effective_cfg(q);
  const std::vector<Solution> sols = solve_all_eligible(q, cfg, eligible, jobs);
  const std::vector<IndexSet> ordered = distinct_supports(sols, eligible, q.s, q.guards.max_family);

  Integer counted = 0;
  if (!ordered.empty()) {
    counted = covering_subsets(minimal_family(ordered), E, q.s);
    if (total <= Integer(static_cast<unsigned long>(q.guards.strata_scan_limit))) {
      report.strata = strata_by_first_cover(ordered, E, q.s, to_u64(total));
      Integer strata_sum = 0;
      for (const auto& [t, n] : report.strata) strata_sum += n;
      if (strata_sum != counted) {
        throw std::logic_error("count_by_supports: strata disagree with inclusion-exclusion");
      }
    }
  }
  report.count = counted;
  report.exactness = classify_exactness(counted, parity_certified_count(q.triple, E, q.s), total);
  return report;
}

CountReport count_M_by_supports(const CountQuery& q, unsigned jobs) {
  validate_query(q);
  if (!variant_full_rank(q.variant)) {
    throw std::invalid_argument("count_M_by_supports: only for the full-rank variants");
  }
  const std::vector<uint64_t> eligible = eligible_primes(q.triple, q.H);
  const uint64_t E = eligible.size();
  const Integer total = binomial(E, q.s);

  CountReport report;
  report.eligible_primes = E;
  if (total == 0) {
    report.exactness = Exactness::Exact;
    return report;
  }

  // Full rank forces support = S, so M is the census of distinct size-s
  // supports. The rank filter is applied here by size, not in the solver,
  // where it would demand support = all eligible primes.
  SolveConfig cfg = q.cfg;
  cfg.delta = variant_has_delta(q.variant) ? q.delta : std::nullopt;
  cfg.full_rank = false;
  const std::vector<Solution> sols = solve_all_eligible(q, cfg, eligible, jobs);

  std::set<std::vector<uint64_t>> supports;
  for (const Solution& sol : sols) {
    if (sol.support.size() == q.s) supports.insert(sol.support);
  }
  const Integer counted(static_cast<unsigned long>(supports.size()));
  report.count = counted;
  if (counted > 0) report.strata[q.s] = counted;
  report.exactness = classify_exactness(counted, parity_certified_count(q.triple, E, q.s), total);
  return report;
}

std::optional<Integer> closed_form_N(const Triple& t, uint32_t s, uint64_t H) {
  if (s < 1 || H < 2) throw std::invalid_argument("closed_form_N: need s >= 1 and H >= 2");
  if (t.a == 1 && t.b == 1 && t.c == 1) {
    return binomial(prime_pi(H) - 1, s - 1);
  }
  if (t.a_plus_b_eq_c()) {
    // the formula counts eligible primes as pi(H) - r, which needs every
    // prime factor of abc to lie below H
    auto factors = factorize(t.abc());
    if (!factors.empty() && factors.back().first > Integer(static_cast<unsigned long>(H))) {
      return std::nullopt;
    }
    return binomial(prime_pi(H) - t.r, s);
  }
  return std::nullopt;
}

bool split_bound_check(const Triple& t, uint32_t s, uint64_t H, const SolveConfig& cfg,
                       const CountGuards& guards) {
  const DeltaBound one = DeltaBound::make(1, 1);
  const Triple swapped = Triple::make(t.b, t.a, t.c);
  CountQuery qn{t, s, H, Variant::N, std::nullopt, cfg, guards};
  CountQuery q1{t, s, H, Variant::NDelta, one, cfg, guards};
  CountQuery q2{swapped, s, H, Variant::NDelta, one, cfg, guards};
  return count_naive(qn).count <= count_naive(q1).count + count_naive(q2).count;
}

void for_each_counted_subset(
    const CountQuery& q,
    const std::function<void(const std::vector<uint64_t>&, const Solution&)>& fn) {
  validate_query(q);
  const std::vector<uint64_t> eligible = eligible_primes(q.triple, q.H);
  const uint64_t E = eligible.size();
  const Integer total = binomial(E, q.s);
  if (total == 0) return;
  if (total > Integer(static_cast<unsigned long>(q.guards.max_subsets))) {
    throw GuardLimitError("for_each_counted_subset: subset count exceeds the limit " +
                          std::to_string(q.guards.max_subsets));
  }
  const SolveConfig cfg = effective_cfg(q);
  const uint64_t total_u = to_u64(total);
  std::vector<uint32_t> idx = first_combination(q.s);
  std::vector<uint64_t> primes(q.s);
  for (uint64_t rank = 0; rank < total_u; ++rank) {
    for (uint32_t i = 0; i < q.s; ++i) primes[i] = eligible[idx[i]];
    auto witness = find_witness(q.triple, PrimeSet::make(primes), cfg);
    if (witness) fn(primes, *witness);
    if (rank + 1 < total_u) next_combination(idx, E);
  }
}

}  // namespace sunit
