// Shared between solver.cpp and counting.cpp: the scan over a pre-built
// smooth index, so the counting layer can guard the index size itself.
#pragma once

#include <vector>

#include "sunitcount/solver.hpp"

namespace sunit::detail {

/// As solve(), over an index already enumerated under cfg's caps.
std::vector<Solution> solve_indexed(const Triple& t, const PrimeSet& S,
                                    const std::vector<SUnitValue>& smooth,
                                    const SolveConfig& cfg, unsigned jobs);

}  // namespace sunit::detail
