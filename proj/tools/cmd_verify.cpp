#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "common.hpp"
#include "report.hpp"
#include "sunitcount/bounds.hpp"
#include "sunitcount/counting.hpp"
#include "sunitcount/ntcore.hpp"

namespace cli {

namespace {

struct CheckLog {
  size_t checks = 0;
  size_t failures = 0;

  void record(const std::string& name, bool pass, Json detail = Json::object()) {
    Json line = Json::object();
    line["check"] = name;
    line["status"] = pass ? "pass" : "fail";
    for (auto& [k, v] : detail.items()) line[k] = v;
    emit(line);
    ++checks;
    if (!pass) ++failures;
  }
};

std::vector<std::array<uint64_t, 3>> builtin_triples() {
  return {{1, 1, 1}, {1, 1, 2}, {1, 2, 3}, {2, 3, 5}, {1, 3, 5},
          {3, 5, 7}, {1, 1, 3}, {3, 5, 16}, {2, 5, 9}, {1, 4, 5}};
}

std::vector<std::array<uint64_t, 3>> load_triples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open --triples file " + path);
  std::vector<std::array<uint64_t, 3>> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    uint64_t a, b, c;
    if (ss >> a >> b >> c) out.push_back({a, b, c});
  }
  if (out.empty()) throw std::invalid_argument("no triples in " + path);
  return out;
}

std::string triple_tag(const std::array<uint64_t, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         ")";
}

uint64_t pick(std::mt19937_64& rng, uint64_t lo, uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

std::vector<uint64_t> h_grid(uint64_t max_H) {
  std::vector<uint64_t> grid;
  for (uint64_t H = 10; H <= max_H; H += 10) grid.push_back(H);
  if (grid.empty()) grid.push_back(std::max<uint64_t>(max_H, 2));
  return grid;
}

sunit::CountQuery base_query(const sunit::Triple& t, uint32_t s, uint64_t H,
                             const sunit::SolveConfig& cfg, const sunit::CountGuards& guards) {
  sunit::CountQuery q;
  q.triple = t;
  q.s = s;
  q.H = H;
  q.cfg = cfg;
  q.cfg.delta.reset();
  q.cfg.full_rank = false;
  q.guards = guards;
  return q;
}

void closed_form_suite(CheckLog& log, const VerifyOptions& opts,
                       const std::vector<std::array<uint64_t, 3>>& triples,
                       const sunit::SolveConfig& cfg, const sunit::CountGuards& guards) {
  for (const auto& tv : triples) {
    auto t = sunit::Triple::make(tv[0], tv[1], tv[2]);
    for (uint32_t s = 1; s <= opts.max_s; ++s) {
      for (uint64_t H : h_grid(opts.max_H)) {
        auto formula = sunit::closed_form_N(t, s, H);
        if (!formula) continue;
        auto q = base_query(t, s, H, cfg, guards);
        auto report = sunit::count_naive(q, opts.jobs);
        const bool pass = report.count == *formula && report.exactness == sunit::Exactness::Exact;
        Json detail;
        detail["count"] = integer_str(report.count);
        detail["formula"] = integer_str(*formula);
        log.record("closed-form " + triple_tag(tv) + " s=" + std::to_string(s) +
                       " H=" + std::to_string(H),
                   pass, detail);
      }
    }
  }
}

void parity_suite(CheckLog& log, const VerifyOptions& opts,
                  const std::vector<std::array<uint64_t, 3>>& triples,
                  const sunit::SolveConfig& cfg, const sunit::CountGuards& guards) {
  struct VariantSpec {
    sunit::Variant variant;
    const char* delta;
  };
  const VariantSpec specs[] = {{sunit::Variant::N, nullptr},
                               {sunit::Variant::NDelta, "1/2"},
                               {sunit::Variant::M, nullptr},
                               {sunit::Variant::MDelta, "0"}};
  for (const auto& tv : triples) {
    if (tv[0] % 2 == 0 || tv[1] % 2 == 0 || tv[2] % 2 == 0) continue;
    auto t = sunit::Triple::make(tv[0], tv[1], tv[2]);
    for (uint32_t s = 1; s <= opts.max_s; ++s) {
      for (const auto& spec : specs) {
        auto q = base_query(t, s, opts.max_H, cfg, guards);
        q.variant = spec.variant;
        if (spec.delta) q.delta = sunit::DeltaBound::parse(spec.delta);
        size_t counted = 0;
        bool all_contain_2 = true;
        sunit::for_each_counted_subset(
            q, [&](const std::vector<uint64_t>& subset, const sunit::Solution&) {
              ++counted;
              if (subset.front() != 2) all_contain_2 = false;
            });
        const bool cap_ok =
            sunit::Integer(counted) <= sunit::binomial(sunit::prime_pi(opts.max_H) - 1, s - 1);
        Json detail;
        detail["counted"] = counted;
        log.record("parity " + triple_tag(tv) + " variant=" + sunit::variant_name(spec.variant) +
                       " s=" + std::to_string(s) + " H=" + std::to_string(opts.max_H),
                   all_contain_2 && cap_ok, detail);
      }
    }
  }
}

void monotonicity_suite(CheckLog& log, const VerifyOptions& opts,
                        const std::vector<std::array<uint64_t, 3>>& triples,
                        const sunit::SolveConfig& cfg, const sunit::CountGuards& guards) {
  std::mt19937_64 rng(opts.seed);
  const auto primes = sunit::sieve_primes(opts.max_H).primes;

  // solvable(S) implies solvable(T) for supersets T
  size_t tried = 0;
  bool superset_ok = true;
  while (tried < 30) {
    const auto& tv = triples[pick(rng, 0, triples.size() - 1)];
    auto t = sunit::Triple::make(tv[0], tv[1], tv[2]);
    std::vector<uint64_t> base, extra;
    for (uint64_t p : primes) {
      if (!mpz_divisible_ui_p(t.abc().get_mpz_t(), p)) {
        (pick(rng, 0, 2) == 0 ? base : extra).push_back(p);
      }
    }
    if (base.empty() || extra.empty()) continue;
    ++tried;
    if (!sunit::is_solvable(t, sunit::PrimeSet::make(base), cfg)) continue;
    std::vector<uint64_t> larger = base;
    for (uint64_t p : extra) {
      if (pick(rng, 0, 1)) larger.push_back(p);
    }
    if (larger.size() == base.size()) larger.push_back(extra.front());
    if (!sunit::is_solvable(t, sunit::PrimeSet::make(larger), cfg)) superset_ok = false;
  }
  log.record("monotonicity supersets preserve solvability (30 samples)", superset_ok);

  // N nondecreasing in H
  bool h_ok = true;
  for (int i = 0; i < 8; ++i) {
    const auto& tv = triples[pick(rng, 0, triples.size() - 1)];
    auto t = sunit::Triple::make(tv[0], tv[1], tv[2]);
    uint32_t s = static_cast<uint32_t>(pick(rng, 1, opts.max_s));
    sunit::Integer prev = -1;
    for (uint64_t H = 10; H <= opts.max_H; H += 10) {
      auto q = base_query(t, s, H, cfg, guards);
      auto n = sunit::count_by_supports(q, opts.jobs).count;
      if (n < prev) h_ok = false;
      prev = n;
    }
  }
  log.record("monotonicity N nondecreasing in H (8 chains)", h_ok);

  // N^delta nondecreasing in delta
  bool d_ok = true;
  for (int i = 0; i < 8; ++i) {
    const auto& tv = triples[pick(rng, 0, triples.size() - 1)];
    auto t = sunit::Triple::make(tv[0], tv[1], tv[2]);
    uint32_t s = static_cast<uint32_t>(pick(rng, 1, opts.max_s));
    sunit::Integer prev = -1;
    for (const char* d : {"0", "1/4", "1/2", "3/4", "1"}) {
      auto q = base_query(t, s, opts.max_H, cfg, guards);
      q.variant = sunit::Variant::NDelta;
      q.delta = sunit::DeltaBound::parse(d);
      auto n = sunit::count_by_supports(q, opts.jobs).count;
      if (n < prev) d_ok = false;
      prev = n;
    }
  }
  log.record("monotonicity N^delta nondecreasing in delta (8 chains)", d_ok);

  // M <= N and M^delta <= N^delta
  bool m_ok = true;
  for (int i = 0; i < 8; ++i) {
    const auto& tv = triples[pick(rng, 0, triples.size() - 1)];
    auto t = sunit::Triple::make(tv[0], tv[1], tv[2]);
    uint32_t s = static_cast<uint32_t>(pick(rng, 1, opts.max_s));
    auto qn = base_query(t, s, opts.max_H, cfg, guards);
    auto qm = qn;
    qm.variant = sunit::Variant::M;
    if (sunit::count_M_by_supports(qm, opts.jobs).count >
        sunit::count_by_supports(qn, opts.jobs).count) {
      m_ok = false;
    }
    auto qnd = qn;
    qnd.variant = sunit::Variant::NDelta;
    qnd.delta = sunit::DeltaBound::parse("1/2");
    auto qmd = qnd;
    qmd.variant = sunit::Variant::MDelta;
    if (sunit::count_M_by_supports(qmd, opts.jobs).count >
        sunit::count_by_supports(qnd, opts.jobs).count) {
      m_ok = false;
    }
  }
  log.record("monotonicity M <= N and M^delta <= N^delta (8 pairs)", m_ok);
}

void evertse_suite(CheckLog& log, const VerifyOptions& opts,
                   const std::vector<std::array<uint64_t, 3>>& triples,
                   const sunit::SolveConfig& cfg) {
  std::mt19937_64 rng(opts.seed + 1);
  const auto primes = sunit::sieve_primes(opts.max_H).primes;
  size_t tried = 0;
  bool ok = true;
  sunit::Integer max_count = 0;
  while (tried < 30) {
    const auto& tv = triples[pick(rng, 0, triples.size() - 1)];
    auto t = sunit::Triple::make(tv[0], tv[1], tv[2]);
    std::vector<uint64_t> chosen;
    for (uint64_t p : primes) {
      if (!mpz_divisible_ui_p(t.abc().get_mpz_t(), p) && pick(rng, 0, 2) == 0) chosen.push_back(p);
    }
    if (chosen.empty() || chosen.size() > 4) continue;
    ++tried;
    auto sols = sunit::solve(t, sunit::PrimeSet::make(chosen), cfg, opts.jobs);
    sunit::Integer n(static_cast<unsigned long>(sols.size()));
    max_count = std::max(max_count, n);
    if (n > sunit::evertse_bound(static_cast<uint32_t>(chosen.size()))) ok = false;
  }
  Json detail;
  detail["max_observed"] = integer_str(max_count);
  log.record("evertse count cap on 30 solves", ok, detail);
}

void pp4_suite(CheckLog& log, const VerifyOptions& opts,
               const std::vector<std::array<uint64_t, 3>>& triples,
               const sunit::SolveConfig& cfg, const sunit::CountGuards& guards) {
  std::mt19937_64 rng(opts.seed + 2);
  for (int i = 0; i < 20; ++i) {
    const auto& tv = triples[pick(rng, 0, triples.size() - 1)];
    auto t = sunit::Triple::make(tv[0], tv[1], tv[2]);
    uint32_t s = static_cast<uint32_t>(pick(rng, 1, std::min<uint32_t>(opts.max_s, 2)));
    uint64_t H = pick(rng, 10, std::min<uint64_t>(opts.max_H, 20));
    bool pass = sunit::split_bound_check(t, s, H, cfg, guards);
    log.record("pp4 split " + triple_tag(tv) + " s=" + std::to_string(s) +
                   " H=" + std::to_string(H),
               pass);
  }
}

}  // namespace

int run_verify(const VerifyOptions& opts) {
  StderrTimer timer("verify", opts.jobs);
  const sunit::ToolConfig tool_cfg = config_for(opts);

  sunit::SolveConfig cfg = solve_config_of(opts, tool_cfg);
  if (opts.height_cap.empty()) cfg.height_cap = 100000;  // verify default: fast desk scale
  const sunit::CountGuards guards = tool_cfg.guards;

  const auto triples =
      opts.triples_file.empty() ? builtin_triples() : load_triples(opts.triples_file);

  std::vector<std::string> suites = opts.suites;
  if (suites.empty()) suites = {"closed-form", "parity", "monotonicity", "evertse", "pp4"};

  CheckLog log;
  for (const std::string& suite : suites) {
    if (suite == "closed-form") {
      closed_form_suite(log, opts, triples, cfg, guards);
    } else if (suite == "parity") {
      parity_suite(log, opts, triples, cfg, guards);
    } else if (suite == "monotonicity") {
      monotonicity_suite(log, opts, triples, cfg, guards);
    } else if (suite == "evertse") {
      evertse_suite(log, opts, triples, cfg);
    } else if (suite == "pp4") {
      pp4_suite(log, opts, triples, cfg, guards);
    } else {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
  }

  Json manifest = Json::object();
  manifest["command"] = "verify";
  manifest["version"] = kVersion;
  manifest["suites"] = suites;
  manifest["max_H"] = opts.max_H;
  manifest["max_s"] = opts.max_s;
  manifest["seed"] = opts.seed;
  manifest["height_cap"] = integer_str(cfg.height_cap);

  Json summary = Json::object();
  summary["manifest"] = manifest;
  summary["checks"] = log.checks;
  summary["failures"] = log.failures;
  emit(summary);
  return log.failures == 0 ? kExitFound : kExitNone;
}

}  // namespace cli
