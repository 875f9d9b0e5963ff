#include <stdexcept>

#include "common.hpp"
#include "report.hpp"
#include "sunitcount/counting.hpp"

namespace cli {

namespace {

sunit::PrimeSet prime_set_of(const SolveOptions& opts, const sunit::Triple& t) {
  if (!opts.primes_csv.empty()) {
    return sunit::PrimeSet::make(parse_u64_csv(opts.primes_csv));
  }
  if (opts.prime_bound < 2) {
    throw std::invalid_argument("need --primes or --prime-bound");
  }
  std::vector<uint64_t> eligible = sunit::eligible_primes(t, opts.prime_bound);
  if (opts.set_size > 0) {
    if (eligible.size() < opts.set_size) {
      throw std::invalid_argument("fewer than --set-size eligible primes below --prime-bound");
    }
    eligible.resize(opts.set_size);
  }
  return sunit::PrimeSet::make(eligible);
}

}  // namespace

int run_solve(const SolveOptions& opts) {
  StderrTimer timer("solve", opts.jobs);
  const sunit::ToolConfig cfg = config_for(opts);
  const sunit::Triple t = triple_of(opts);
  const sunit::PrimeSet S = prime_set_of(opts, t);
  sunit::SolveConfig solve_cfg = solve_config_of(opts, cfg);
  solve_cfg.full_rank = opts.full_rank;

  const std::vector<sunit::Solution> solutions = sunit::solve(t, S, solve_cfg, opts.jobs);
  for (const sunit::Solution& sol : solutions) emit(solution_json(sol));

  Json manifest = Json::object();
  manifest["command"] = "solve";
  manifest["version"] = kVersion;
  manifest["a"] = opts.a;
  manifest["b"] = opts.b;
  manifest["c"] = opts.c;
  manifest["primes"] = S.primes();
  manifest["height_cap"] = integer_str(solve_cfg.height_cap);
  manifest["exponent_cap"] =
      solve_cfg.exponent_cap ? Json(*solve_cfg.exponent_cap) : Json(nullptr);
  manifest["delta"] = solve_cfg.delta ? Json(solve_cfg.delta->str()) : Json(nullptr);
  manifest["full_rank"] = solve_cfg.full_rank;

  Json summary = Json::object();
  summary["manifest"] = manifest;
  summary["solutions"] = solutions.size();
  emit(summary);
  return solutions.empty() ? kExitNone : kExitFound;
}

}  // namespace cli
