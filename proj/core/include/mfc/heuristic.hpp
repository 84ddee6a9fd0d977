#pragma once

#include "mfc/metrics.hpp"
#include "mfc/types.hpp"

namespace mfc {

struct HeuristicConfig {
  // Break otherwise-equal choices in favor of the higher resulting group
  // balance. The solver is deterministic and seedless either way.
  bool balance_tiebreak = true;
};

struct SolveResult {
  Grouping grouping;
  MetricsReport metrics;
};

// Preference-first pass: for rank p = 1..h, each topic admits the unassigned
// students whose p-th wish it is, in descending welfare order, while the
// group holds fewer than C^l members.
Grouping initial_assignment(const Instance& instance, const WelfareMatrix& welfare,
                            const HeuristicConfig& config);

// Repairs a partial grouping into a complete partition within bounds:
// (a) unassigned students join undersized groups, wished topics first;
// (b) while students remain, the most prevalent topic among their wishes is
//     opened/filled up to C^u;
// (c) for sizes s = 1..C^l-1, groups of size s are disbanded (cheapest
//     welfare sum first) and their members reassigned.
// Throws GuardError if the iteration budget (n*m) is exceeded, which cannot
// happen for feasible bounds.
Grouping group_adjustment(Grouping partial, const Instance& instance,
                          const WelfareMatrix& welfare, const HeuristicConfig& config);

// Greedy preference-first solver; requires feasible bounds (throws
// InfeasibleError otherwise) and returns a complete in-bounds partition.
SolveResult heuristic_solve(const Instance& instance, const HeuristicConfig& config = {});

}  // namespace mfc
