#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mfc/metrics.hpp"
#include "mfc/rng.hpp"
#include "mfc/welfare.hpp"
#include "test_support.hpp"

using namespace mfc;

namespace {

WelfareMatrix welfare_with(std::size_t n, std::size_t m,
                           std::vector<std::tuple<StudentId, TopicId, double>> entries) {
  WelfareMatrix welfare;
  welfare.values = Matrix(n, m);
  for (const auto& [id, topic, value] : entries) welfare.values.at(id, topic) = value;
  return welfare;
}

}  // namespace

TEST_CASE("nash product over groups") {
  SUBCASE("two groups with welfare sums 3 and 4 give (1+3)(1+4) = 20") {
    const WelfareMatrix welfare = welfare_with(2, 2, {{1, 1, 3.0}, {2, 2, 4.0}});
    const Grouping grouping{{1, {1}}, {2, {2}}};
    CHECK(nash_product(grouping, welfare) == 20.0);
  }
  SUBCASE("all-unwished assignments give product 1") {
    const WelfareMatrix welfare = welfare_with(3, 2, {});
    const Grouping grouping{{1, {1, 2}}, {2, {3}}};
    CHECK(nash_product(grouping, welfare) == 1.0);
  }
  SUBCASE("single group of sum s gives 1 + s") {
    const WelfareMatrix welfare = welfare_with(2, 1, {{1, 1, 2.5}, {2, 1, 1.5}});
    const Grouping grouping{{1, {1, 2}}};
    CHECK(nash_product(grouping, welfare) == 5.0);
  }
  SUBCASE("empty grouping yields 1 and is flagged") {
    const WelfareMatrix welfare = welfare_with(1, 1, {});
    CHECK(nash_product({}, welfare) == 1.0);
  }
}

TEST_CASE("nash normalization") {
  CHECK(nash_normalized(20.0, 2) == doctest::Approx(std::log2(20.0)).epsilon(1e-12));
  CHECK(nash_normalized(1.0, 5) == 0.0);
  for (int k = 2; k <= 9; ++k) {
    const double l = std::pow(static_cast<double>(k), 3.0);
    CHECK(nash_normalized(l, k) == doctest::Approx(3.0).epsilon(1e-12));
  }
  // degenerate k falls back to the natural log
  CHECK(nash_normalized(std::exp(2.0), 1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("nash_normalized is strictly increasing in the product for fixed k") {
  double previous = nash_normalized(1.0, 4);
  for (double l = 2.0; l < 1e6; l *= 3.0) {
    const double current = nash_normalized(l, 4);
    CHECK(current > previous);
    previous = current;
  }
}

TEST_CASE("balance scores") {
  CHECK(balance_from_counts(2, 2) == 1.0);
  CHECK(balance_from_counts(1, 3) == doctest::Approx(1.0 / 3.0));
  CHECK(balance_from_counts(4, 0) == 0.0);
  CHECK(balance_from_counts(0, 4) == 0.0);

  const Instance instance = test::InstanceBuilder()
                                .wishes({{1}, {1}, {1}, {1}})
                                .topic_count(1)
                                .cats({0, 0, 0, 1})
                                .build();
  const std::vector<StudentId> everyone{1, 2, 3, 4};
  CHECK(group_balance(everyone, instance) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(group_balance(std::vector<StudentId>{}, instance), std::invalid_argument);
}

TEST_CASE("grouping balance is the minimum over groups") {
  const Instance instance = test::InstanceBuilder()
                                .wishes({{1}, {1}, {1}, {1}, {2}, {2}, {2}, {2}})
                                .topic_count(2)
                                .cats({0, 1, 0, 1, 0, 1, 1, 1})
                                .build();
  const Grouping grouping{{1, {1, 2, 3, 4}}, {2, {5, 6, 7, 8}}};
  // balances 1.0 and 1/3
  CHECK(grouping_balance(grouping, instance) == doctest::Approx(1.0 / 3.0));

  const Grouping single{{1, {1, 2}}};
  CHECK(grouping_balance(single, instance) == 1.0);
}

TEST_CASE("dataset-level balance of an 8/16 roster is 0.5") {
  std::vector<std::vector<TopicId>> rows;
  std::vector<int> cats;
  for (int i = 0; i < 24; ++i) {
    rows.push_back({1});
    cats.push_back(i < 8 ? 0 : 1);
  }
  const Instance instance =
      test::InstanceBuilder().wishes(rows).topic_count(1).cats(cats).build();
  std::vector<StudentId> everyone;
  for (StudentId id = 1; id <= 24; ++id) everyone.push_back(id);
  CHECK(group_balance(everyone, instance) == 0.5);
}

TEST_CASE("satisfaction counts wished assignments only") {
  const Instance instance = test::InstanceBuilder()
                                .wishes({{1, 2}, {1, 3}, {2, 3}, {3, 1}, {2, 1}})
                                .topic_count(3)
                                .build();
  SUBCASE("everyone in a wished group") {
    const Grouping grouping{{1, {1, 2}}, {2, {3, 5}}, {3, {4}}};
    CHECK(satisfaction(grouping, instance) == 1.0);
  }
  SUBCASE("nobody in a wished group") {
    // student ids wishing neither their group topic: put everyone on an
    // unwished topic
    const Grouping grouping{{3, {1}}, {2, {2, 4}}, {1, {3}}};
    // student 2 does not wish topic 2? wishes are {1,3} -> unwished; student 4
    // wishes {3,1} -> 2 unwished; student 1 wishes {1,2} -> 3 unwished;
    // student 3 wishes {2,3} -> 1 unwished. Student 5 unassigned.
    CHECK(satisfaction(grouping, instance) == 0.0);
  }
  SUBCASE("three of five satisfied") {
    // 1 and 5 wish topic 1, 3 wishes topic 3; 2 and 4 sit on unwished topics
    const Grouping mixed{{1, {1, 5}}, {2, {2, 4}}, {3, {3}}};
    CHECK(satisfaction(mixed, instance) == doctest::Approx(0.6));
  }
  SUBCASE("unassigned students count as unsatisfied") {
    const Grouping grouping{{1, {1, 2}}};
    CHECK(satisfaction(grouping, instance) == doctest::Approx(0.4));
  }
}

TEST_CASE("satisfaction is invariant under permuting wish ranks") {
  Rng rng(41);
  const Instance instance = test::random_feasible_instance(rng, 6, 14, 4, 7, 3, 1, 2);
  Instance permuted = instance;
  for (StudentId id = 1; id <= instance.size(); ++id) {
    std::swap(permuted.wishes.at(id, 1), permuted.wishes.at(id, 3));
  }
  permuted.interest = build_interest_matrix(permuted.wishes, permuted.wish_count(),
                                            permuted.topic_count);
  const Grouping grouping{{1, {1, 2, 3}}, {2, {4, 5, 6}}};
  CHECK(satisfaction(grouping, instance) == satisfaction(grouping, permuted));
}

TEST_CASE("nash product invariances") {
  const WelfareMatrix welfare = welfare_with(
      6, 3, {{1, 1, 0.5}, {2, 1, 0.25}, {3, 2, 1.5}, {4, 2, 0.75}, {5, 3, 2.0}, {6, 3, 1.0}});

  const Grouping grouping{{1, {1, 2}}, {2, {3, 4}}, {3, {5, 6}}};

  SUBCASE("permuting members inside a group does not change the product") {
    const Grouping permuted{{1, {2, 1}}, {2, {4, 3}}, {3, {6, 5}}};
    CHECK(nash_product(grouping, welfare) == nash_product(permuted, welfare));
  }
  SUBCASE("adding a zero-welfare member leaves the product unchanged") {
    // student 5 has zero welfare for topic 1
    const Grouping base{{1, {1, 2}}, {2, {3, 4}}, {3, {6}}};
    const Grouping moved{{1, {1, 2, 5}}, {2, {3, 4}}, {3, {6}}};
    CHECK(nash_product(moved, welfare) == nash_product(base, welfare));
  }
}

TEST_CASE("balance is symmetric under category flip") {
  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance instance = test::random_feasible_instance(rng, 4, 16, 3, 6, 3, 1, 2);
    Instance flipped = instance;
    for (Student& s : flipped.students) s.category = 1 - s.category;
    std::vector<StudentId> members;
    for (StudentId id = 1; id <= instance.size(); ++id) {
      if (rng.below(2) == 0) members.push_back(id);
    }
    if (members.empty()) continue;
    CHECK(group_balance(members, instance) == group_balance(members, flipped));
  }
}

TEST_CASE("metrics report aggregates the pieces") {
  const Instance instance = test::InstanceBuilder()
                                .wishes({{1, 2}, {1, 2}, {2, 1}, {2, 1}})
                                .topic_count(2)
                                .cats({0, 1, 0, 1})
                                .size_bounds(2, 2)
                                .build();
  const Grouping grouping{{1, {1, 2}}, {2, {3, 4}}};
  const MetricsReport report = compute_metrics(grouping, instance);
  CHECK(report.group_count == 2);
  CHECK(report.cardinalities == std::vector<int>{2, 2});
  CHECK(report.balance == 1.0);
  CHECK(report.satisfaction == 1.0);
  CHECK(report.nash_product > 1.0);
  CHECK(report.nash_log == doctest::Approx(std::log(report.nash_product)).epsilon(1e-12));
  CHECK(report.nash_normalized ==
        doctest::Approx(std::log2(report.nash_product)).epsilon(1e-12));
  CHECK_FALSE(report.k_warning);

  const std::string row = metrics_csv_row("heuristic", instance.bounds, report);
  CHECK(row.substr(0, 14) == "heuristic,2,2,");
  CHECK(metrics_csv_header().find("nash_product") != std::string::npos);
}
