#include "common.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>

namespace cli {

sunit::ToolConfig config_for(const CommonOptions& opts) {
  if (!opts.config_path.empty()) return sunit::load_config(opts.config_path);
  return sunit::load_default_config();
}

sunit::Triple triple_of(const CommonOptions& opts) {
  try {
    return sunit::Triple::make(sunit::Integer(opts.a), sunit::Integer(opts.b),
                               sunit::Integer(opts.c));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("expected positive integers for --a/--b/--c");
  }
}

sunit::SolveConfig solve_config_of(const CommonOptions& opts, const sunit::ToolConfig& cfg) {
  sunit::SolveConfig out;
  out.height_cap = opts.height_cap.empty() ? cfg.height_cap : sunit::Integer(opts.height_cap);
  if (out.height_cap < 1) throw std::invalid_argument("--height-cap must be >= 1");
  out.exponent_cap = opts.exponent_cap;
  out.delta = delta_of(opts);
  return out;
}

std::optional<sunit::DeltaBound> delta_of(const CommonOptions& opts) {
  if (opts.delta.empty()) return std::nullopt;
  return sunit::DeltaBound::parse(opts.delta);
}

std::vector<uint64_t> parse_u64_csv(const std::string& text) {
  std::vector<uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    unsigned long long v = std::stoull(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer list entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

StderrTimer::StderrTimer(std::string command, unsigned jobs)
    : command_(std::move(command)), jobs_(jobs), start_(std::chrono::steady_clock::now()) {}

StderrTimer::~StderrTimer() {
  const auto elapsed = std::chrono::steady_clock::now() - start_;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  std::cerr << "[sunitcount] " << command_ << " finished in " << ms << " ms (jobs=" << jobs_
            << ")\n";
}

}  // namespace cli
