#pragma once

#include <span>
#include <vector>

#include "mfc/heuristic.hpp"
#include "mfc/types.hpp"

namespace mfc {

struct KnapsackItem {
  int id = 0;  // caller-defined label (student id when selecting for a topic)
  int weight = 1;
  double value = 0.0;
};

struct KnapsackResult {
  std::vector<int> selected;  // item ids in input order
  double total_value = 0.0;
  int total_weight = 0;
};

// Classic 0/1 knapsack by dynamic programming: maximizes total value subject
// to total weight <= budget. Among maximum-value selections the
// lexicographically smallest id sequence is returned, so reconstruction is
// deterministic. Weights must be positive, budget non-negative.
KnapsackResult knapsack_01(std::span<const KnapsackItem> items, int budget);

// Unit-weight selection used per topic: maximizes total value under a
// head-count budget; ties are broken by the balance of the selected set
// (when enabled), then by the lexicographically smallest id set. `categories`
// runs parallel to `items`; all values must be positive.
std::vector<int> knapsack_select(std::span<const KnapsackItem> items,
                                 std::span<const int> categories, int budget,
                                 bool balance_tiebreak);

// Which count feeds the "count mod C^l == 0" budget rule: the students still
// unassigned when the topic is processed, or the instance-wide n.
enum class ModBasis { Unassigned, Global };

enum class TopicOrder { Index, Demand };

struct KnapsackConfig {
  bool balance_tiebreak = true;
  ModBasis mod_basis = ModBasis::Unassigned;
  TopicOrder topic_order = TopicOrder::Index;
};

// Per-topic maximal-knapsack solver: iterates topics, selects the best
// unassigned students with positive welfare for each (budget C^l when the
// unassigned count divides by C^l, else C^u), then runs the shared group
// adjustment. Requires feasible bounds.
SolveResult knapsack_solve(const Instance& instance, const KnapsackConfig& config = {});

}  // namespace mfc
