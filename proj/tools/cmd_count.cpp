#include <iostream>
#include <stdexcept>

#include "common.hpp"
#include "report.hpp"
#include "sunitcount/counting.hpp"

namespace cli {

namespace {

sunit::CountReport run_algorithm(const sunit::CountQuery& q, const std::string& algorithm,
                                 unsigned jobs) {
  if (algorithm == "naive") return sunit::count_naive(q, jobs);
  if (sunit::variant_full_rank(q.variant)) return sunit::count_M_by_supports(q, jobs);
  return sunit::count_by_supports(q, jobs);
}

Json manifest_of(const CountOptions& opts, const sunit::CountQuery& q,
                 const std::string& algorithm) {
  Json manifest = Json::object();
  manifest["command"] = "count";
  manifest["version"] = kVersion;
  manifest["variant"] = sunit::variant_name(q.variant);
  manifest["a"] = opts.a;
  manifest["b"] = opts.b;
  manifest["c"] = opts.c;
  manifest["s"] = q.s;
  manifest["H"] = q.H;
  manifest["delta"] = q.delta ? Json(q.delta->str()) : Json(nullptr);
  manifest["height_cap"] = integer_str(q.cfg.height_cap);
  manifest["exponent_cap"] = q.cfg.exponent_cap ? Json(*q.cfg.exponent_cap) : Json(nullptr);
  manifest["algorithm"] = algorithm;
  return manifest;
}

void emit_csv(const CountOptions& opts, const sunit::CountQuery& q, const std::string& algorithm,
              const sunit::CountReport& report, bool with_header) {
  if (with_header) {
    std::cout << "variant,a,b,c,s,H,delta,algorithm,count,exactness,eligible_primes,strata\n";
  }
  std::cout << sunit::variant_name(q.variant) << ',' << opts.a << ',' << opts.b << ',' << opts.c
            << ',' << q.s << ',' << q.H << ',' << (q.delta ? q.delta->str() : "") << ','
            << algorithm << ',' << integer_str(report.count) << ','
            << sunit::exactness_name(report.exactness) << ',' << report.eligible_primes << ','
            << strata_csv(report.strata) << "\n";
}

}  // namespace

int run_count(const CountOptions& opts) {
  StderrTimer timer("count", opts.jobs);
  const sunit::ToolConfig cfg = config_for(opts);

  auto variant = sunit::parse_variant(opts.variant);
  if (!variant) throw std::invalid_argument("unknown --variant '" + opts.variant + "'");
  if (opts.algorithm != "naive" && opts.algorithm != "supports" && opts.algorithm != "both") {
    throw std::invalid_argument("unknown --algorithm '" + opts.algorithm + "'");
  }

  sunit::CountQuery q;
  q.triple = triple_of(opts);
  q.s = opts.set_size;
  q.H = opts.prime_bound;
  q.variant = *variant;
  q.delta = delta_of(opts);
  q.cfg = solve_config_of(opts, cfg);
  q.cfg.delta.reset();  // the variant's delta lives on the query
  q.guards = cfg.guards;
  if (opts.max_subsets) q.guards.max_subsets = *opts.max_subsets;
  if (opts.max_family) q.guards.max_family = *opts.max_family;

  if (sunit::variant_has_delta(q.variant) != q.delta.has_value()) {
    throw std::invalid_argument(std::string("variant ") + sunit::variant_name(q.variant) +
                                (q.delta ? " takes no --delta" : " requires --delta p/q"));
  }

  std::vector<std::pair<std::string, sunit::CountReport>> runs;
  if (opts.algorithm == "both") {
    runs.emplace_back("naive", run_algorithm(q, "naive", opts.jobs));
    runs.emplace_back("supports", run_algorithm(q, "supports", opts.jobs));
  } else {
    runs.emplace_back(opts.algorithm, run_algorithm(q, opts.algorithm, opts.jobs));
  }

  bool first = true;
  for (const auto& [algorithm, report] : runs) {
    if (opts.csv) {
      emit_csv(opts, q, algorithm, report, first);
    } else {
      Json out = Json::object();
      out["manifest"] = manifest_of(opts, q, algorithm);
      fill_count_report(out, report);
      emit(out);
    }
    first = false;
  }

  if (runs.size() == 2 && runs[0].second.count != runs[1].second.count) {
    std::cerr << "[sunitcount] count mismatch: naive=" << integer_str(runs[0].second.count)
              << " supports=" << integer_str(runs[1].second.count) << "\n";
    return kExitSelfCheck;
  }
  return runs.back().second.count > 0 ? kExitFound : kExitNone;
}

}  // namespace cli
