#include "mfc/knapsack.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mfc/errors.hpp"
#include "mfc/metrics.hpp"
#include "mfc/validation.hpp"
#include "mfc/welfare.hpp"

namespace mfc {

namespace {

constexpr double kImpossible = -std::numeric_limits<double>::infinity();

void check_items(std::span<const KnapsackItem> items, int budget) {
  if (budget < 0) throw std::invalid_argument("knapsack budget must be non-negative");
  for (const KnapsackItem& item : items) {
    if (item.weight <= 0) throw std::invalid_argument("knapsack weights must be positive");
    if (item.value < 0.0) throw std::invalid_argument("knapsack values must be non-negative");
  }
}

}  // namespace

KnapsackResult knapsack_01(std::span<const KnapsackItem> items, int budget) {
  check_items(items, budget);
  const std::size_t n = items.size();
  const std::size_t width = static_cast<std::size_t>(budget) + 1;

  // best[i][w]: max value achievable from items[i..n) under capacity w.
  std::vector<double> best((n + 1) * width, 0.0);
  auto cell = [&](std::size_t i, int w) -> double& {
    return best[i * width + static_cast<std::size_t>(w)];
  };
  for (std::size_t i = n; i-- > 0;) {
    for (int w = 0; w <= budget; ++w) {
      double value = cell(i + 1, w);
      if (items[i].weight <= w) {
        const double take = items[i].value + cell(i + 1, w - items[i].weight);
        if (take > value) value = take;
      }
      cell(i, w) = value;
    }
  }

  // Forward reconstruction. Taking an item whenever it preserves the optimum
  // yields the lexicographically smallest id sequence; once the remaining
  // optimum is zero, skipping everything is the smallest completion.
  KnapsackResult result;
  result.total_value = cell(0, budget);
  int w = budget;
  for (std::size_t i = 0; i < n; ++i) {
    if (cell(i, w) <= 0.0) break;
    if (items[i].weight <= w &&
        items[i].value + cell(i + 1, w - items[i].weight) == cell(i, w)) {
      result.selected.push_back(items[i].id);
      result.total_weight += items[i].weight;
      w -= items[i].weight;
    }
  }
  return result;
}

std::vector<int> knapsack_select(std::span<const KnapsackItem> items,
                                 std::span<const int> categories, int budget,
                                 bool balance_tiebreak) {
  check_items(items, budget);
  if (categories.size() != items.size()) {
    throw std::invalid_argument("categories must run parallel to items");
  }
  for (const KnapsackItem& item : items) {
    if (item.weight != 1 || item.value <= 0.0) {
      throw std::invalid_argument("knapsack_select expects unit weights and positive values");
    }
  }

  const int n = static_cast<int>(items.size());
  if (budget == 0 || n == 0) return {};
  if (n <= budget) {
    // Every value is positive, so the full set is the unique optimum.
    std::vector<int> all;
    all.reserve(items.size());
    for (const KnapsackItem& item : items) all.push_back(item.id);
    return all;
  }

  // g[i][c][z]: max value choosing exactly c items from items[i..n), z of
  // them in category 0; -inf when unreachable.
  const std::size_t span_c = static_cast<std::size_t>(budget) + 1;
  std::vector<double> table(static_cast<std::size_t>(n + 1) * span_c * span_c, kImpossible);
  auto cell = [&](int i, int c, int z) -> double& {
    return table[(static_cast<std::size_t>(i) * span_c + static_cast<std::size_t>(c)) * span_c +
                 static_cast<std::size_t>(z)];
  };
  cell(n, 0, 0) = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    const int zero = categories[static_cast<std::size_t>(i)] == 0 ? 1 : 0;
    for (int c = 0; c <= budget; ++c) {
      for (int z = 0; z <= c; ++z) {
        double value = cell(i + 1, c, z);
        if (c >= 1 && z >= zero) {
          const double below = cell(i + 1, c - 1, z - zero);
          if (below != kImpossible) {
            const double take = items[static_cast<std::size_t>(i)].value + below;
            if (take > value) value = take;
          }
        }
        cell(i, c, z) = value;
      }
    }
  }

  double best_value = kImpossible;
  for (int c = 0; c <= budget; ++c) {
    for (int z = 0; z <= c; ++z) {
      best_value = std::max(best_value, cell(0, c, z));
    }
  }

  // Target cells realize the optimal value; the balance tie-break keeps only
  // those with the best selected-set balance.
  std::vector<std::pair<int, int>> targets;
  for (int c = 0; c <= budget; ++c) {
    for (int z = 0; z <= c; ++z) {
      if (cell(0, c, z) == best_value) targets.emplace_back(c, z);
    }
  }
  if (balance_tiebreak) {
    double best_balance = -1.0;
    for (const auto& [c, z] : targets) {
      best_balance = std::max(best_balance, balance_from_counts(z, c - z));
    }
    std::erase_if(targets, [&](const std::pair<int, int>& t) {
      return balance_from_counts(t.second, t.first - t.second) != best_balance;
    });
  }

  // Per target cell, greedily taking whenever the take-branch achieves the
  // cell optimum gives that cell's lexicographically smallest selection
  // (values are strictly positive); the overall answer is the smallest
  // across cells.
  std::vector<int> best_sel;
  std::vector<int> sel;
  for (const auto& [tc, tz] : targets) {
    sel.clear();
    int c = tc, z = tz;
    for (int i = 0; i < n && c > 0; ++i) {
      const int zero = categories[static_cast<std::size_t>(i)] == 0 ? 1 : 0;
      if (z >= zero) {
        const double below = cell(i + 1, c - 1, z - zero);
        if (below != kImpossible &&
            items[static_cast<std::size_t>(i)].value + below == cell(i, c, z)) {
          sel.push_back(items[static_cast<std::size_t>(i)].id);
          --c;
          z -= zero;
        }
      }
    }
    if (best_sel.empty() ||
        std::lexicographical_compare(sel.begin(), sel.end(), best_sel.begin(), best_sel.end())) {
      best_sel = sel;
    }
  }
  return best_sel;
}

SolveResult knapsack_solve(const Instance& instance, const KnapsackConfig& config) {
  const FeasibilityVerdict verdict =
      check_feasibility(instance.size(), instance.bounds, instance.topic_count);
  if (!verdict.feasible) {
    throw InfeasibleError(verdict.describe(instance.size(), instance.bounds,
                                           instance.topic_count));
  }

  const WelfareMatrix welfare = build_welfare(instance);
  const int n = instance.size();
  const int m = instance.topic_count;

  std::vector<TopicId> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 1);
  if (config.topic_order == TopicOrder::Demand) {
    std::vector<double> demand(static_cast<std::size_t>(m) + 1, 0.0);
    for (StudentId id = 1; id <= n; ++id) {
      for (TopicId j = 1; j <= m; ++j) demand[static_cast<std::size_t>(j)] += welfare.values.at(id, j);
    }
    std::stable_sort(order.begin(), order.end(), [&](TopicId a, TopicId b) {
      return demand[static_cast<std::size_t>(a)] > demand[static_cast<std::size_t>(b)];
    });
  }

  std::vector<char> assigned(static_cast<std::size_t>(n) + 1, 0);
  int unassigned = n;
  Grouping groups;
  std::vector<KnapsackItem> items;
  std::vector<int> cats;
  for (TopicId topic : order) {
    if (unassigned == 0) break;
    items.clear();
    cats.clear();
    for (StudentId id = 1; id <= n; ++id) {
      if (assigned[static_cast<std::size_t>(id)]) continue;
      const double value = welfare.values.at(id, topic);
      if (value > 0.0) {
        items.push_back({id, 1, value});
        cats.push_back(instance.student(id).category);
      }
    }
    if (items.empty()) continue;

    const int basis = config.mod_basis == ModBasis::Global ? n : unassigned;
    const int budget = (instance.bounds.lower > 0 && basis % instance.bounds.lower == 0)
                           ? instance.bounds.lower
                           : instance.bounds.upper;
    std::vector<int> selected = knapsack_select(items, cats, budget, config.balance_tiebreak);
    if (selected.empty()) continue;
    for (int id : selected) assigned[static_cast<std::size_t>(id)] = 1;
    unassigned -= static_cast<int>(selected.size());
    groups[topic] = std::move(selected);
  }

  HeuristicConfig adjust_config{config.balance_tiebreak};
  Grouping full = group_adjustment(std::move(groups), instance, welfare, adjust_config);
  MetricsReport metrics = compute_metrics(full, instance, welfare);
  return {std::move(full), std::move(metrics)};
}

}  // namespace mfc
