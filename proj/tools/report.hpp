// JSON-lines report building shared by the subcommands. Reports written to
// stdout are byte-stable for a fixed manifest: execution details that vary
// between runs (wall-clock, worker count) go to stderr only.
#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "sunitcount/counting.hpp"
#include "sunitcount/solver.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

// Exit-code contract, part of the public interface:
//   0 found/pass, 1 none, 2 usage, 3 guard limit, 4 self-check failure.
inline constexpr int kExitFound = 0;
inline constexpr int kExitNone = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitSelfCheck = 4;

std::string integer_str(const sunit::Integer& x);

Json strata_json(const std::map<uint32_t, sunit::Integer>& strata);
std::string strata_csv(const std::map<uint32_t, sunit::Integer>& strata);

Json solution_json(const sunit::Solution& sol);
void fill_count_report(Json& out, const sunit::CountReport& report);

// one JSON object per line
void emit(const Json& object);

}  // namespace cli
