#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "commands.hpp"
#include "sunitcount/config.hpp"
#include "sunitcount/counting.hpp"
#include "sunitcount/solver.hpp"

namespace cli {

sunit::ToolConfig config_for(const CommonOptions& opts);
sunit::Triple triple_of(const CommonOptions& opts);
sunit::SolveConfig solve_config_of(const CommonOptions& opts, const sunit::ToolConfig& cfg);
std::optional<sunit::DeltaBound> delta_of(const CommonOptions& opts);
std::vector<uint64_t> parse_u64_csv(const std::string& text);

/// Logs elapsed wall-clock and worker count to stderr on destruction; stdout
/// reports stay byte-identical across runs and worker counts.
class StderrTimer {
 public:
  StderrTimer(std::string command, unsigned jobs);
  ~StderrTimer();

 private:
  std::string command_;
  unsigned jobs_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cli
