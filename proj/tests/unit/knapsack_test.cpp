#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "mfc/knapsack.hpp"
#include "mfc/metrics.hpp"
#include "mfc/oracle.hpp"
#include "mfc/rng.hpp"
#include "mfc/validation.hpp"
#include "test_support.hpp"

using namespace mfc;

TEST_CASE("textbook knapsack instance") {
  const std::vector<KnapsackItem> items{{1, 10, 60.0}, {2, 20, 100.0}, {3, 30, 120.0}};
  CHECK(test::brute_force_knapsack_value(items, 50) == 220.0);
  const KnapsackResult result = knapsack_01(items, 50);
  CHECK(result.total_value == 220.0);
  CHECK(result.total_weight == 50);
  CHECK(result.selected == std::vector<int>{2, 3});
}

TEST_CASE("zero budget selects nothing") {
  const std::vector<KnapsackItem> items{{1, 1, 5.0}, {2, 2, 7.0}};
  const KnapsackResult result = knapsack_01(items, 0);
  CHECK(result.selected.empty());
  CHECK(result.total_value == 0.0);
}

TEST_CASE("unit weights select the top-b values") {
  const std::vector<KnapsackItem> items{{1, 1, 9.0}, {2, 1, 7.0}, {3, 1, 5.0}, {4, 1, 3.0}};
  const KnapsackResult result = knapsack_01(items, 2);
  CHECK(result.total_value == test::brute_force_knapsack_value(items, 2));
  CHECK(result.total_value == 16.0);
  CHECK(result.selected == std::vector<int>{1, 2});
}

TEST_CASE("knapsack DP equals brute force on random instances") {
  Rng rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    std::vector<KnapsackItem> items;
    for (int i = 0; i < n; ++i) {
      items.push_back({i + 1, 1 + static_cast<int>(rng.below(12)),
                       static_cast<double>(rng.below(200)) / 4.0});
    }
    const int budget = static_cast<int>(rng.below(40));
    const KnapsackResult result = knapsack_01(items, budget);
    CHECK(result.total_value == test::brute_force_knapsack_value(items, budget));
    int weight = 0;
    for (int id : result.selected) weight += items[static_cast<std::size_t>(id) - 1].weight;
    CHECK(weight <= budget);
    CHECK(weight == result.total_weight);
  }
}

TEST_CASE("reconstruction is deterministic and lexicographically minimal") {
  // two disjoint optimal selections; ids {1,4} beat {2,3}
  const std::vector<KnapsackItem> items{{1, 1, 5.0}, {2, 1, 5.0}, {3, 1, 5.0}, {4, 1, 5.0}};
  const KnapsackResult result = knapsack_01(items, 2);
  CHECK(result.selected == std::vector<int>{1, 2});
  CHECK(knapsack_01(items, 2).selected == result.selected);
}

TEST_CASE("knapsack_select picks the two welfare-4 candidates") {
  const std::vector<KnapsackItem> items{{1, 1, 4.0}, {2, 1, 4.0}, {3, 1, 2.0}};
  const std::vector<int> cats{0, 1, 0};
  const auto chosen = knapsack_select(items, cats, 2, true);
  CHECK(chosen == std::vector<int>{1, 2});
  CHECK(test::brute_force_knapsack_value(items, 2) == 8.0);
}

TEST_CASE("knapsack_select balance tie-break") {
  // equal values; budget 2; candidates 1,2 are category 0, candidate 3 is 1.
  const std::vector<KnapsackItem> items{{1, 1, 3.0}, {2, 1, 3.0}, {3, 1, 3.0}};
  const std::vector<int> cats{0, 0, 1};
  SUBCASE("enabled: prefers the mixed pair") {
    const auto chosen = knapsack_select(items, cats, 2, true);
    CHECK(chosen == std::vector<int>{1, 3});
  }
  SUBCASE("disabled: lexicographically smallest ids") {
    const auto chosen = knapsack_select(items, cats, 2, false);
    CHECK(chosen == std::vector<int>{1, 2});
  }
}

TEST_CASE("knapsack_select without tie-break matches the generic DP on unit weights") {
  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    std::vector<KnapsackItem> items;
    std::vector<int> cats;
    for (int i = 0; i < n; ++i) {
      items.push_back({i + 1, 1, 0.25 + static_cast<double>(rng.below(40)) / 4.0});
      cats.push_back(static_cast<int>(rng.below(2)));
    }
    const int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 2));
    const auto selected = knapsack_select(items, cats, budget, false);
    const KnapsackResult generic = knapsack_01(items, budget);
    CHECK(selected == generic.selected);
  }
}

TEST_CASE("knapsack solver fills groups only from wishers in step 1") {
  // everyone wishes topic 1; topic 2 is never opened by the selection pass
  const Instance instance = test::InstanceBuilder()
                                .wishes({{1}, {1}, {1}, {1}})
                                .topic_count(2)
                                .size_bounds(4, 4)
                                .build();
  const SolveResult result = knapsack_solve(instance);
  CHECK(result.grouping.size() == 1);
  CHECK(result.grouping.count(1) == 1);
  CHECK(result.grouping.count(2) == 0);
  CHECK(is_complete_partition(result.grouping, instance));
}

TEST_CASE("budget rule: unassigned count versus global n") {
  // n = 7, bounds [2,3]. Global basis: 7 % 2 = 1, so every topic gets budget
  // C^u = 3. Unassigned basis: after topic 1 takes 3 students, 4 remain and
  // 4 % 2 = 0 caps topic 2 at C^l = 2.
  const Instance instance = test::InstanceBuilder()
                                .wishes({{1, 2}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {2, 3}, {2, 3}})
                                .topic_count(3)
                                .size_bounds(2, 3)
                                .build();
  KnapsackConfig unassigned_basis;
  unassigned_basis.mod_basis = ModBasis::Unassigned;
  KnapsackConfig global_basis;
  global_basis.mod_basis = ModBasis::Global;

  const SolveResult a = knapsack_solve(instance, unassigned_basis);
  const SolveResult b = knapsack_solve(instance, global_basis);
  CHECK(is_complete_partition(a.grouping, instance));
  CHECK(is_complete_partition(b.grouping, instance));
  CHECK(a.grouping.at(1).size() == 3);
  CHECK(a.grouping.at(2).size() == 2);  // capped at C^l
  CHECK(b.grouping.at(2).size() == 3);  // global basis keeps C^u
}

TEST_CASE("knapsack solver output is complete and within the oracle bound") {
  Rng rng(107);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance instance = test::random_feasible_instance(rng, 6, 36, 3, 14, 3, 2, 5);
    const SolveResult result = knapsack_solve(instance);
    CHECK(is_complete_partition(result.grouping, instance));
    CHECK(result.metrics.nash_product >= 1.0);
  }
  for (int trial = 0; trial < 8; ++trial) {
    const Instance instance = test::random_feasible_instance(rng, 5, 6, 3, 3, 2, 2, 2);
    const SolveResult result = knapsack_solve(instance);
    const OracleResult oracle = oracle_solve(instance);
    CHECK(result.metrics.nash_product <= oracle.optimal_nash * (1.0 + 1e-12));
  }
}

TEST_CASE("knapsack solver is deterministic") {
  Rng rng(109);
  const Instance instance = test::random_feasible_instance(rng, 15, 30, 5, 12, 3, 2, 4);
  const SolveResult first = knapsack_solve(instance);
  const SolveResult second = knapsack_solve(instance);
  CHECK(serialize_grouping(first.grouping) == serialize_grouping(second.grouping));
}

TEST_CASE("demand topic order is accepted and still yields a partition") {
  Rng rng(113);
  const Instance instance = test::random_feasible_instance(rng, 10, 20, 4, 8, 3, 2, 3);
  KnapsackConfig config;
  config.topic_order = TopicOrder::Demand;
  const SolveResult result = knapsack_solve(instance, config);
  CHECK(is_complete_partition(result.grouping, instance));
}
