#include <iostream>
#include <stdexcept>

#include "common.hpp"
#include "report.hpp"
#include "sunitcount/bounds.hpp"
#include "sunitcount/counting.hpp"

namespace cli {

namespace {

struct EnvelopeSpec {
  sunit::Variant variant;
  bool forces_delta_zero;
  bool wants_delta;  // delta in (0,1) expected
};

EnvelopeSpec spec_for(sunit::Envelope e) {
  switch (e) {
    case sunit::Envelope::PP6: return {sunit::Variant::NDelta, false, true};
    case sunit::Envelope::PP7: return {sunit::Variant::N, false, false};
    case sunit::Envelope::PP9: return {sunit::Variant::MDelta, true, false};
    case sunit::Envelope::PP10: return {sunit::Variant::MDelta, false, true};
    case sunit::Envelope::PP11: return {sunit::Variant::MDelta, true, false};
    case sunit::Envelope::PP12: return {sunit::Variant::M, false, false};
  }
  throw std::invalid_argument("unknown envelope");
}

}  // namespace

int run_diagnose(const DiagnoseOptions& opts) {
  StderrTimer timer("diagnose", opts.jobs);
  const sunit::ToolConfig tool_cfg = config_for(opts);
  const sunit::BoundConstants consts = opts.constants_path.empty()
                                           ? tool_cfg.consts
                                           : sunit::load_config(opts.constants_path).consts;

  auto envelope = sunit::parse_envelope(opts.envelope);
  if (!envelope) throw std::invalid_argument("unknown --envelope '" + opts.envelope + "'");
  const EnvelopeSpec spec = spec_for(*envelope);

  sunit::CountQuery q;
  q.triple = triple_of(opts);
  q.s = opts.set_size;
  q.variant = spec.variant;
  q.cfg = solve_config_of(opts, tool_cfg);
  q.cfg.delta.reset();
  q.guards = tool_cfg.guards;
  if (spec.forces_delta_zero) {
    q.delta = sunit::DeltaBound::parse("0");
    if (!opts.delta.empty() && !delta_of(opts)->is_zero()) {
      throw std::invalid_argument("envelope " + opts.envelope + " fixes delta = 0");
    }
  } else if (spec.wants_delta) {
    q.delta = opts.delta.empty() ? sunit::DeltaBound::parse("1/2") : *delta_of(opts);
  } else if (!opts.delta.empty()) {
    throw std::invalid_argument("envelope " + opts.envelope + " takes no --delta");
  }

  const std::vector<uint64_t> grid = parse_u64_csv(opts.grid_csv);
  if (opts.csv) std::cout << "H,count,exactness,envelope,ratio\n";

  size_t rows = 0;
  uint64_t max_H = 0;
  for (uint64_t H : grid) {
    if (H < 16) {
      std::cerr << "[sunitcount] skipping H=" << H << " (envelopes require H >= 16)\n";
      continue;
    }
    q.H = H;
    max_H = std::max(max_H, H);
    const sunit::CountReport report =
        sunit::variant_full_rank(q.variant) ? sunit::count_M_by_supports(q, opts.jobs)
                                            : sunit::count_by_supports(q, opts.jobs);
    const double envelope_value = sunit::theorem_envelope(*envelope, q.s, H, consts);
    const double ratio = mpz_get_d(report.count.get_mpz_t()) / envelope_value;
    if (opts.csv) {
      std::cout << H << ',' << integer_str(report.count) << ','
                << sunit::exactness_name(report.exactness) << ',' << envelope_value << ','
                << ratio << "\n";
    } else {
      Json row = Json::object();
      row["H"] = H;
      row["count"] = integer_str(report.count);
      row["exactness"] = sunit::exactness_name(report.exactness);
      row["envelope"] = envelope_value;
      row["ratio"] = ratio;
      emit(row);
    }
    ++rows;
  }

  // exponent audit over the solutions found at the largest grid point
  Json audit = Json::object();
  Json audit_max = Json(nullptr);
  if (rows > 0) {
    q.H = max_H;
    const auto eligible = sunit::eligible_primes(q.triple, max_H);
    if (!eligible.empty()) {
      sunit::SolveConfig cfg = q.cfg;
      cfg.delta = q.delta;
      const auto S = sunit::PrimeSet::make(eligible);
      const auto sols = sunit::solve(q.triple, S, cfg, opts.jobs);
      const auto result = sunit::empirical_exponent_audit(sols, S, max_H);
      for (const auto& [p, stat] : result.per_prime) audit[std::to_string(p)] = stat;
      if (result.max_stat) audit_max = *result.max_stat;
    }
  }

  if (opts.csv) {
    std::cout << "\nprime,max_stat\n";
    for (auto& [p, stat] : audit.items()) {
      std::cout << p << ',' << stat.dump() << "\n";
    }
    return rows > 0 ? kExitFound : kExitNone;
  }

  Json manifest = Json::object();
  manifest["command"] = "diagnose";
  manifest["version"] = kVersion;
  manifest["envelope"] = opts.envelope;
  manifest["variant"] = sunit::variant_name(q.variant);
  manifest["a"] = opts.a;
  manifest["b"] = opts.b;
  manifest["c"] = opts.c;
  manifest["s"] = q.s;
  manifest["H_grid"] = grid;
  manifest["delta"] = q.delta ? Json(q.delta->str()) : Json(nullptr);
  manifest["height_cap"] = integer_str(q.cfg.height_cap);
  Json constants = Json::object();
  constants["c0_lemma1"] = consts.c0_lemma1;
  constants["c1_lemma2"] = consts.c1_lemma2;
  constants["c_bw"] = consts.c_bw;
  constants[opts.envelope] = consts.theorem_constant(opts.envelope);
  manifest["constants"] = constants;

  Json summary = Json::object();
  summary["manifest"] = manifest;
  summary["rows"] = rows;
  summary["audit"] = audit;
  summary["audit_max"] = audit_max;
  emit(summary);
  return rows > 0 ? kExitFound : kExitNone;
}

}  // namespace cli
