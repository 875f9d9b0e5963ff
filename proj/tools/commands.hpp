#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cli {

struct CommonOptions {
  std::string a = "1", b = "1", c = "1";
  std::string height_cap;  // empty: config default
  std::optional<uint32_t> exponent_cap;
  std::string delta;  // empty: absent
  unsigned jobs = 1;
  std::string config_path;  // empty: $SUNITCOUNT_CONFIG or defaults
};

struct SolveOptions : CommonOptions {
  std::string primes_csv;      // explicit prime set
  uint64_t prime_bound = 0;    // or: eligible primes up to H ...
  uint32_t set_size = 0;       // ... optionally truncated to the first s
  bool full_rank = false;
};

struct CountOptions : CommonOptions {
  std::string variant = "N";
  uint32_t set_size = 1;
  uint64_t prime_bound = 2;
  std::string algorithm = "supports";  // naive | supports | both
  bool csv = false;
  std::optional<uint64_t> max_subsets;
  std::optional<uint64_t> max_family;
};

struct VerifyOptions : CommonOptions {
  std::vector<std::string> suites;  // empty: all
  uint64_t max_H = 30;
  uint32_t max_s = 3;
  uint64_t seed = 20250401;
  std::string triples_file;  // lines "a b c"; empty: built-in list
};

struct DiagnoseOptions : CommonOptions {
  std::string envelope;    // PP6 PP7 PP9 PP10 PP11 PP12
  uint32_t set_size = 2;
  std::string grid_csv = "16,32,64";
  std::string constants_path;  // key = value file for the bound constants
  bool csv = false;
};

int run_solve(const SolveOptions& opts);
int run_count(const CountOptions& opts);
int run_verify(const VerifyOptions& opts);
int run_diagnose(const DiagnoseOptions& opts);

}  // namespace cli
