#include "mfc/heuristic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mfc/errors.hpp"
#include "mfc/metrics.hpp"
#include "mfc/validation.hpp"
#include "mfc/welfare.hpp"

namespace mfc {

namespace {

std::pair<int, int> category_counts(const std::vector<StudentId>& members,
                                    const Instance& instance) {
  int c0 = 0, c1 = 0;
  for (StudentId id : members) {
    (instance.student(id).category == 0 ? c0 : c1)++;
  }
  return {c0, c1};
}

double balance_after_adding(const std::vector<StudentId>& members, StudentId candidate,
                            const Instance& instance) {
  auto [c0, c1] = category_counts(members, instance);
  (instance.student(candidate).category == 0 ? c0 : c1)++;
  return balance_from_counts(c0, c1);
}

// Admission order into one group: welfare for the topic (descending; zero
// exactly for unwished topics), then the balance tie-break, then registration,
// then id. Returns the index into `pool` of the winner.
std::size_t pick_candidate(const std::vector<StudentId>& pool, TopicId topic,
                           const std::vector<StudentId>& members, const Instance& instance,
                           const WelfareMatrix& welfare, bool balance_tiebreak) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    const StudentId a = pool[i], b = pool[best];
    const double wa = welfare.values.at(a, topic), wb = welfare.values.at(b, topic);
    if (wa != wb) {
      if (wa > wb) best = i;
      continue;
    }
    if (balance_tiebreak) {
      const double ba = balance_after_adding(members, a, instance);
      const double bb = balance_after_adding(members, b, instance);
      if (ba != bb) {
        if (ba > bb) best = i;
        continue;
      }
    }
    const auto& sa = instance.student(a);
    const auto& sb = instance.student(b);
    if (sa.registration != sb.registration) {
      if (sa.registration < sb.registration) best = i;
      continue;
    }
    if (a < b) best = i;
  }
  return best;
}

struct Adjuster {
  const Instance& instance;
  const WelfareMatrix& welfare;
  const bool balance_tiebreak;
  Grouping& groups;
  std::vector<char> assigned;
  int unassigned = 0;
  std::int64_t guard = 0;
  std::int64_t guard_limit = 0;

  Adjuster(const Instance& inst, const WelfareMatrix& w, bool tiebreak, Grouping& g)
      : instance(inst), welfare(w), balance_tiebreak(tiebreak), groups(g),
        assigned(static_cast<std::size_t>(inst.size()) + 1, 0) {
    for (const auto& [topic, members] : groups) {
      for (StudentId id : members) assigned[static_cast<std::size_t>(id)] = 1;
    }
    for (StudentId id = 1; id <= instance.size(); ++id) {
      if (!assigned[static_cast<std::size_t>(id)]) ++unassigned;
    }
    guard_limit = static_cast<std::int64_t>(instance.size()) * instance.topic_count +
                  instance.size() + instance.topic_count + 16;
  }

  void tick() {
    if (++guard > guard_limit) {
      throw GuardError("group adjustment exceeded its iteration budget (n*m); bounds " +
                       std::to_string(instance.bounds.lower) + ".." +
                       std::to_string(instance.bounds.upper));
    }
  }

  void admit(StudentId id, TopicId topic) {
    groups[topic].push_back(id);
    assigned[static_cast<std::size_t>(id)] = 1;
    --unassigned;
  }

  double group_welfare_sum(TopicId topic, const std::vector<StudentId>& members) const {
    double sum = 0.0;
    for (StudentId id : members) sum += welfare.values.at(id, topic);
    return sum;
  }

  // Undersized target for one student: wished groups in rank order first,
  // then the smallest group below the size cap.
  TopicId find_target(StudentId id, int size_cap) const {
    for (int p = 1; p <= instance.wish_count(); ++p) {
      const TopicId j = instance.wishes.at(id, p);
      auto it = groups.find(j);
      if (it != groups.end() && static_cast<int>(it->second.size()) < size_cap) return j;
    }
    TopicId best = 0;
    std::size_t best_size = 0;
    double best_balance = -1.0;
    for (const auto& [topic, members] : groups) {
      if (static_cast<int>(members.size()) >= size_cap) continue;
      bool better = false;
      if (best == 0 || members.size() < best_size) {
        better = true;
      } else if (members.size() == best_size && balance_tiebreak) {
        const double bal = balance_after_adding(members, id, instance);
        if (bal > best_balance) better = true;
      }
      if (better) {
        best = topic;
        best_size = members.size();
        best_balance = balance_tiebreak ? balance_after_adding(members, id, instance) : -1.0;
      }
    }
    return best;
  }

  // Phase (a): place unassigned students into groups still below C^l.
  void fill_undersized() {
    for (StudentId id = 1; id <= instance.size(); ++id) {
      if (assigned[static_cast<std::size_t>(id)]) continue;
      const TopicId target = find_target(id, instance.bounds.lower);
      if (target != 0) admit(id, target);
    }
  }

  // Phase (b): repeatedly open/fill the most prevalent topic among the
  // remaining students' wishes, up to C^u.
  void fill_prevalent() {
    const int cu = instance.bounds.upper;
    while (unassigned > 0) {
      tick();
      std::vector<int> counts(static_cast<std::size_t>(instance.topic_count) + 1, 0);
      std::vector<StudentId> pool;
      for (StudentId id = 1; id <= instance.size(); ++id) {
        if (assigned[static_cast<std::size_t>(id)]) continue;
        pool.push_back(id);
        for (TopicId j : instance.wishes.row(id)) ++counts[static_cast<std::size_t>(j)];
      }

      TopicId topic = 0;
      int best_count = 0;
      for (TopicId j = 1; j <= instance.topic_count; ++j) {
        if (counts[static_cast<std::size_t>(j)] <= best_count) continue;
        auto it = groups.find(j);
        const int size = it == groups.end() ? 0 : static_cast<int>(it->second.size());
        if (size < cu) {
          topic = j;
          best_count = counts[static_cast<std::size_t>(j)];
        }
      }
      if (topic == 0) {
        // Every wished group is full: open the lowest-index unused topic.
        for (TopicId j = 1; j <= instance.topic_count; ++j) {
          if (groups.find(j) == groups.end()) {
            topic = j;
            break;
          }
        }
      }
      if (topic == 0) {
        throw GuardError("no topic can accept the remaining unassigned students");
      }

      std::vector<StudentId>& members = groups[topic];
      while (static_cast<int>(members.size()) < cu && !pool.empty()) {
        const std::size_t pick =
            pick_candidate(pool, topic, members, instance, welfare, balance_tiebreak);
        const StudentId id = pool[pick];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        admit(id, topic);
      }
      if (members.empty()) groups.erase(topic);
    }
  }

  // Phase (c) fallback when every group sits at C^u: open a fresh topic for
  // the stranded students and pull members down from the largest groups until
  // the new group reaches C^l. On feasible bounds the pulls are always
  // available: n > g*C^u forces k >= g+1, hence g*(C^u - C^l) >= C^l - f.
  void open_rescue_group(const std::vector<StudentId>& stranded) {
    TopicId topic = 0;
    int best_count = -1;
    for (TopicId j = 1; j <= instance.topic_count; ++j) {
      if (groups.find(j) != groups.end()) continue;
      int count = 0;
      for (StudentId id : stranded) {
        if (instance.wishes.wishes(id, j)) ++count;
      }
      if (count > best_count) {
        best_count = count;
        topic = j;
      }
    }
    if (topic == 0) throw GuardError("no unused topic available for a rescue group");

    for (StudentId id : stranded) admit(id, topic);
    std::vector<StudentId>& members = groups[topic];

    while (static_cast<int>(members.size()) < instance.bounds.lower) {
      tick();
      // Donor: the largest group still above C^l.
      TopicId donor = 0;
      std::size_t donor_size = 0;
      for (const auto& [t, mem] : groups) {
        if (t == topic) continue;
        if (static_cast<int>(mem.size()) > instance.bounds.lower && mem.size() > donor_size) {
          donor = t;
          donor_size = mem.size();
        }
      }
      if (donor == 0) {
        throw GuardError("rescue group cannot reach C^l: no donor group above the lower bound");
      }
      std::vector<StudentId>& donor_members = groups[donor];
      // Move the member with the best welfare trade toward the new topic.
      std::size_t pick = 0;
      auto gain = [&](StudentId id) {
        return welfare.values.at(id, topic) - welfare.values.at(id, donor);
      };
      for (std::size_t i = 1; i < donor_members.size(); ++i) {
        const StudentId a = donor_members[i], b = donor_members[pick];
        const double ga = gain(a), gb = gain(b);
        if (ga != gb) {
          if (ga > gb) pick = i;
          continue;
        }
        if (balance_tiebreak) {
          const double ba = balance_after_adding(members, a, instance);
          const double bb = balance_after_adding(members, b, instance);
          if (ba != bb) {
            if (ba > bb) pick = i;
            continue;
          }
        }
        const auto& sa = instance.student(a);
        const auto& sb = instance.student(b);
        if (sa.registration != sb.registration) {
          if (sa.registration < sb.registration) pick = i;
          continue;
        }
        if (a < b) pick = i;
      }
      const StudentId moved = donor_members[pick];
      donor_members.erase(donor_members.begin() + static_cast<std::ptrdiff_t>(pick));
      members.push_back(moved);
    }
  }

  // Phase (c): for sizes s = 1..C^l-1, disband groups of size s (cheapest
  // welfare sum first) and reassign their members.
  void resolve_undersized() {
    for (int s = 1; s < instance.bounds.lower; ++s) {
      while (true) {
        tick();
        TopicId victim = 0;
        double victim_sum = 0.0;
        for (const auto& [topic, members] : groups) {
          if (static_cast<int>(members.size()) != s) continue;
          const double sum = group_welfare_sum(topic, members);
          if (victim == 0 || sum < victim_sum) {
            victim = topic;
            victim_sum = sum;
          }
        }
        if (victim == 0) break;

        std::vector<StudentId> freed = std::move(groups[victim]);
        groups.erase(victim);
        for (StudentId id : freed) {
          assigned[static_cast<std::size_t>(id)] = 0;
          ++unassigned;
        }
        std::sort(freed.begin(), freed.end(), [&](StudentId a, StudentId b) {
          const auto& sa = instance.student(a);
          const auto& sb = instance.student(b);
          if (sa.registration != sb.registration) return sa.registration < sb.registration;
          return a < b;
        });

        std::vector<StudentId> stranded;
        for (StudentId id : freed) {
          const TopicId target = find_target(id, instance.bounds.upper);
          if (target != 0) {
            admit(id, target);
          } else {
            stranded.push_back(id);
          }
        }
        if (!stranded.empty()) open_rescue_group(stranded);
      }
    }
  }
};

}  // namespace

Grouping initial_assignment(const Instance& instance, const WelfareMatrix& welfare,
                            const HeuristicConfig& config) {
  Grouping groups;
  const int n = instance.size();
  const int cap = instance.bounds.lower;
  std::vector<char> assigned(static_cast<std::size_t>(n) + 1, 0);

  for (int p = 1; p <= instance.wish_count(); ++p) {
    std::map<TopicId, std::vector<StudentId>> pools;
    for (StudentId id = 1; id <= n; ++id) {
      if (!assigned[static_cast<std::size_t>(id)]) {
        pools[instance.wishes.at(id, p)].push_back(id);
      }
    }
    for (auto& [topic, pool] : pools) {
      std::vector<StudentId>& members = groups[topic];
      while (static_cast<int>(members.size()) < cap && !pool.empty()) {
        const std::size_t pick =
            pick_candidate(pool, topic, members, instance, welfare, config.balance_tiebreak);
        const StudentId id = pool[pick];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        members.push_back(id);
        assigned[static_cast<std::size_t>(id)] = 1;
      }
      if (members.empty()) groups.erase(topic);
    }
  }
  return groups;
}

Grouping group_adjustment(Grouping partial, const Instance& instance,
                          const WelfareMatrix& welfare, const HeuristicConfig& config) {
  Adjuster adjuster(instance, welfare, config.balance_tiebreak, partial);
  adjuster.fill_undersized();
  adjuster.fill_prevalent();
  adjuster.resolve_undersized();
  if (!is_complete_partition(partial, instance)) {
    throw GuardError("group adjustment failed to produce a complete in-bounds partition");
  }
  return partial;
}

SolveResult heuristic_solve(const Instance& instance, const HeuristicConfig& config) {
  const FeasibilityVerdict verdict =
      check_feasibility(instance.size(), instance.bounds, instance.topic_count);
  if (!verdict.feasible) {
    throw InfeasibleError(
        verdict.describe(instance.size(), instance.bounds, instance.topic_count));
  }
  const WelfareMatrix welfare = build_welfare(instance);
  Grouping partial = initial_assignment(instance, welfare, config);
  Grouping full = group_adjustment(std::move(partial), instance, welfare, config);
  MetricsReport metrics = compute_metrics(full, instance, welfare);
  return {std::move(full), std::move(metrics)};
}

}  // namespace mfc
