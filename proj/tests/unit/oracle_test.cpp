#include <doctest.h>

#include <vector>

#include "mfc/errors.hpp"
#include "mfc/heuristic.hpp"
#include "mfc/knapsack.hpp"
#include "mfc/oracle.hpp"
#include "mfc/rng.hpp"
#include "mfc/validation.hpp"
#include "mfc/welfare.hpp"
#include "test_support.hpp"

using namespace mfc;

TEST_CASE("two students with disjoint wishes get the matching assignment") {
  const Instance instance = test::InstanceBuilder()
                                .wishes({{1}, {2}})
                                .topic_count(2)
                                .size_bounds(1, 1)
                                .build();
  const OracleResult result = oracle_solve(instance);
  CHECK(result.grouping == Grouping{{1, {1}}, {2, {2}}});
  const WelfareMatrix welfare = build_welfare(instance);
  CHECK(result.optimal_nash ==
        (1.0 + welfare.values.at(1, 1)) * (1.0 + welfare.values.at(2, 2)));
  CHECK(is_complete_partition(result.grouping, instance));
}

TEST_CASE("oracle agrees with an independent enumeration") {
  Rng rng(211);
  for (int trial = 0; trial < 8; ++trial) {
    const Instance instance = test::random_feasible_instance(rng, 4, 4, 2, 2, 2, 2, 2, 0);
    const OracleResult result = oracle_solve(instance);
    const test::EnumerationResult reference = test::enumerate_partitions(instance, 1e-9);
    REQUIRE(reference.found);
    CHECK(result.optimal_nash == doctest::Approx(reference.best_nash).epsilon(1e-12));
    // among equal-nash optima the oracle reports maximal balance
    CHECK(result.metrics.balance ==
          doctest::Approx(reference.best_balance_among_optima).epsilon(1e-12));
  }
}

TEST_CASE("oracle bounds both solvers from above") {
  Rng rng(223);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance instance = test::random_feasible_instance(rng, 6, 6, 3, 3, 3, 2, 2);
    const OracleResult oracle = oracle_solve(instance);
    const SolveResult h = heuristic_solve(instance);
    const SolveResult k = knapsack_solve(instance);
    CHECK(h.metrics.nash_product <= oracle.optimal_nash * (1.0 + 1e-12));
    CHECK(k.metrics.nash_product <= oracle.optimal_nash * (1.0 + 1e-12));
  }
}

TEST_CASE("balance breaks ties between nash-equal optima") {
  // four welfare-symmetric students, two per category: any 2+2 split has the
  // same nash value, so the reported optimum must have mixed groups
  const Instance instance = test::InstanceBuilder()
                                .wishes({{1, 2}, {1, 2}, {1, 2}, {1, 2}})
                                .topic_count(2)
                                .size_bounds(2, 2)
                                .cats({0, 0, 1, 1})
                                .weights(1.0, 0.0)  // registration would break the symmetry
                                .build();
  const OracleResult result = oracle_solve(instance);
  CHECK(result.metrics.balance == 1.0);
  const test::EnumerationResult reference = test::enumerate_partitions(instance, 1e-9);
  CHECK(reference.best_balance_among_optima == 1.0);
}

TEST_CASE("state budget guard refuses huge instances") {
  std::vector<std::vector<TopicId>> rows;
  for (int i = 0; i < 30; ++i) rows.push_back({1 + (i % 3)});
  const Instance instance =
      test::InstanceBuilder().wishes(rows).topic_count(3).size_bounds(10, 10).build();
  CHECK_THROWS_AS(oracle_solve(instance), GuardError);
  CHECK_THROWS_AS(oracle_solve(instance, 1000), GuardError);
}

TEST_CASE("oracle reports infeasibility") {
  const Instance instance = test::InstanceBuilder()
                                .wishes({{1}, {2}, {3}})
                                .topic_count(3)
                                .size_bounds(4, 5)
                                .build();
  CHECK_THROWS_AS(oracle_solve(instance), InfeasibleError);
}
