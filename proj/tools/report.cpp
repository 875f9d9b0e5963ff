#include "report.hpp"

#include <iostream>

namespace cli {

std::string integer_str(const sunit::Integer& x) { return x.get_str(); }

Json strata_json(const std::map<uint32_t, sunit::Integer>& strata) {
  Json out = Json::object();
  for (const auto& [t, n] : strata) out[std::to_string(t)] = integer_str(n);
  return out;
}

std::string strata_csv(const std::map<uint32_t, sunit::Integer>& strata) {
  std::string out;
  for (const auto& [t, n] : strata) {
    if (!out.empty()) out += '|';
    out += std::to_string(t) + ":" + integer_str(n);
  }
  return out;
}

Json solution_json(const sunit::Solution& sol) {
  Json record = Json::object();
  record["u"] = integer_str(sol.u.value);
  record["v"] = integer_str(sol.v.value);
  record["w"] = integer_str(sol.w.value);
  record["exp_u"] = sol.u.exponents;
  record["exp_v"] = sol.v.exponents;
  record["exp_w"] = sol.w.exponents;
  record["support"] = sol.support;
  record["omega"] = sol.omega_uvw();
  return record;
}

void fill_count_report(Json& out, const sunit::CountReport& report) {
  out["count"] = integer_str(report.count);
  out["exactness"] = sunit::exactness_name(report.exactness);
  out["strata"] = strata_json(report.strata);
  out["eligible_primes"] = report.eligible_primes;
}

void emit(const Json& object) { std::cout << object.dump() << "\n"; }

}  // namespace cli
