#pragma once

#include <cstdint>

#include "mfc/metrics.hpp"
#include "mfc/types.hpp"

namespace mfc {

struct OracleResult {
  Grouping grouping;
  MetricsReport metrics;
  double optimal_nash = 1.0;
};

// Exhaustive ground-truth solver for tiny instances: enumerates every
// assignment of students to topics (m^n states, pruning only on group-size
// overflow), keeps complete in-bounds partitions, and returns the one
// maximizing the Nash product, tie-broken by maximal grouping balance, then
// by lexicographically smallest assignment vector.
//
// Throws GuardError when m^n exceeds max_states and InfeasibleError when no
// feasible assignment exists.
OracleResult oracle_solve(const Instance& instance,
                          std::uint64_t max_states = 10'000'000);

}  // namespace mfc
