#include "mfc/oracle.hpp"

#include <string>
#include <vector>

#include "mfc/errors.hpp"
#include "mfc/metrics.hpp"
#include "mfc/validation.hpp"
#include "mfc/welfare.hpp"

namespace mfc {

namespace {

// m^n with saturation, for the state-budget guard.
std::uint64_t state_count(int topics, int students, std::uint64_t cap) {
  std::uint64_t states = 1;
  for (int i = 0; i < students; ++i) {
    if (states > cap / static_cast<std::uint64_t>(topics)) return cap + 1;
    states *= static_cast<std::uint64_t>(topics);
  }
  return states;
}

struct Search {
  const Instance& instance;
  const WelfareMatrix& welfare;
  const int n;
  const int m;

  std::vector<TopicId> current;       // assignment vector, students 1..n
  std::vector<int> sizes;             // per topic
  std::vector<int> zeros;             // category-0 count per topic
  std::vector<double> scratch;        // leaf welfare sums, recomputed fresh

  bool found = false;
  double best_nash = 0.0;
  double best_balance = -1.0;
  std::vector<TopicId> best;

  Search(const Instance& inst, const WelfareMatrix& w)
      : instance(inst), welfare(w), n(inst.size()), m(inst.topic_count),
        current(static_cast<std::size_t>(inst.size()), 0),
        sizes(static_cast<std::size_t>(inst.topic_count) + 1, 0),
        zeros(static_cast<std::size_t>(inst.topic_count) + 1, 0),
        scratch(static_cast<std::size_t>(inst.topic_count) + 1, 0.0) {}

  void leaf() {
    for (TopicId j = 1; j <= m; ++j) {
      const int size = sizes[static_cast<std::size_t>(j)];
      if (size != 0 && size < instance.bounds.lower) return;  // undersized group
    }
    // Group sums accumulate in ascending student order, the same order
    // nash_product uses, so the reported metrics match the search value.
    std::fill(scratch.begin(), scratch.end(), 0.0);
    for (StudentId id = 1; id <= n; ++id) {
      const TopicId j = current[static_cast<std::size_t>(id) - 1];
      scratch[static_cast<std::size_t>(j)] += welfare.values.at(id, j);
    }
    double nash = 1.0;
    double balance = 1.0;
    for (TopicId j = 1; j <= m; ++j) {
      const int size = sizes[static_cast<std::size_t>(j)];
      if (size == 0) continue;
      nash *= 1.0 + scratch[static_cast<std::size_t>(j)];
      const int z = zeros[static_cast<std::size_t>(j)];
      const double group_bal = balance_from_counts(z, size - z);
      if (group_bal < balance) balance = group_bal;
    }
    // Enumeration runs in ascending assignment-vector order, so replacing
    // only on a strict improvement keeps the lexicographically smallest
    // optimum.
    if (!found || nash > best_nash ||
        (nash == best_nash && balance > best_balance)) {
      found = true;
      best_nash = nash;
      best_balance = balance;
      best = current;
    }
  }

  void descend(int student) {
    if (student > n) {
      leaf();
      return;
    }
    for (TopicId j = 1; j <= m; ++j) {
      if (sizes[static_cast<std::size_t>(j)] >= instance.bounds.upper) continue;  // overflow prune
      current[static_cast<std::size_t>(student) - 1] = j;
      sizes[static_cast<std::size_t>(j)]++;
      if (instance.student(student).category == 0) zeros[static_cast<std::size_t>(j)]++;
      descend(student + 1);
      if (instance.student(student).category == 0) zeros[static_cast<std::size_t>(j)]--;
      sizes[static_cast<std::size_t>(j)]--;
    }
  }
};

}  // namespace

OracleResult oracle_solve(const Instance& instance, std::uint64_t max_states) {
  const std::uint64_t states = state_count(instance.topic_count, instance.size(), max_states);
  if (states > max_states) {
    throw GuardError("oracle state budget exceeded: m^n > " + std::to_string(max_states));
  }
  const FeasibilityVerdict verdict =
      check_feasibility(instance.size(), instance.bounds, instance.topic_count);
  if (!verdict.feasible) {
    throw InfeasibleError(
        verdict.describe(instance.size(), instance.bounds, instance.topic_count));
  }

  const WelfareMatrix welfare = build_welfare(instance);
  Search search(instance, welfare);
  search.descend(1);
  if (!search.found) {
    throw InfeasibleError("no assignment satisfies the cardinality bounds");
  }

  OracleResult result;
  for (StudentId id = 1; id <= instance.size(); ++id) {
    result.grouping[search.best[static_cast<std::size_t>(id) - 1]].push_back(id);
  }
  result.metrics = compute_metrics(result.grouping, instance, welfare);
  result.optimal_nash = search.best_nash;
  return result;
}

}  // namespace mfc
