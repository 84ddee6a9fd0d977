#include "mfc/validation.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace mfc {

namespace {

std::string topic_tag(TopicId topic) { return "topic " + std::to_string(topic); }
std::string student_tag(StudentId id) { return "student " + std::to_string(id); }

}  // namespace

std::string FeasibilityVerdict::describe(int n, Bounds bounds, int topics) const {
  std::string msg = "n=" + std::to_string(n) + ", C^l=" + std::to_string(bounds.lower) +
                    ", C^u=" + std::to_string(bounds.upper) + ", m=" + std::to_string(topics);
  if (feasible) {
    msg += ": feasible with k in [" + std::to_string(k_min) + ", " + std::to_string(k_max) + "]";
  } else {
    msg += ": infeasible, no group count k in [1, " + std::to_string(topics) +
           "] satisfies k*C^l <= n <= k*C^u";
  }
  return msg;
}

ValidationReport validate_instance(const Instance& instance) {
  ValidationReport report;
  auto violate = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

  const int n = instance.size();
  const int m = instance.topic_count;
  const int h = instance.wish_count();

  if (n < 1) violate("instance has no students");
  if (m < 1) violate("instance has no topics");
  if (h < 1) violate("wish matrix has no columns");
  if (h > m) violate("wish count exceeds topic count");
  if (!instance.bounds.valid()) violate("invalid bounds: lower must satisfy 0 <= C^l <= C^u");

  for (int i = 0; i < n; ++i) {
    const Student& s = instance.students[static_cast<std::size_t>(i)];
    if (s.id != i + 1) {
      violate("student ids not contiguous at position " + std::to_string(i + 1));
      return report;  // downstream checks index by id
    }
    if (s.category != 0 && s.category != 1) {
      violate("protected category out of {0,1} for " + student_tag(s.id));
    }
  }

  if (static_cast<int>(instance.wishes.students()) != n ||
      static_cast<int>(instance.interest.rows()) != n ||
      static_cast<int>(instance.interest.cols()) != m ||
      static_cast<int>(instance.priority.rows()) != n ||
      static_cast<int>(instance.priority.cols()) != m) {
    violate("matrix shapes disagree with n and m");
    return report;
  }

  // Wish rows: in-range, pairwise distinct.
  for (StudentId id = 1; id <= n; ++id) {
    const auto row = instance.wishes.row(id);
    for (std::size_t p = 0; p < row.size(); ++p) {
      if (row[p] < 1 || row[p] > m) {
        violate("invalid topic index " + std::to_string(row[p]) + " in wish row of " +
                student_tag(id));
      }
      for (std::size_t q = p + 1; q < row.size(); ++q) {
        if (row[p] == row[q]) {
          violate("duplicate wish " + topic_tag(row[p]) + " for " + student_tag(id));
        }
      }
    }
  }
  if (!report.violations.empty()) return report;

  // V: support equals wish support, wished entries are exactly h/p.
  for (StudentId id = 1; id <= n; ++id) {
    for (TopicId j = 1; j <= m; ++j) {
      const double v = instance.interest.at(id, j);
      const int rank = instance.wishes.rank_of(id, j);
      if (rank == 0 && v != 0.0) {
        violate("V support mismatch: positive interest for unwished " + topic_tag(j) +
                " of " + student_tag(id));
      } else if (rank != 0 && v != static_cast<double>(h) / rank) {
        violate("V value mismatch at " + student_tag(id) + ", " + topic_tag(j) +
                ": expected h/p");
      }
    }
  }

  // W: support equals wish support, positive on it.
  for (StudentId id = 1; id <= n; ++id) {
    for (TopicId j = 1; j <= m; ++j) {
      const double w = instance.priority.at(id, j);
      const bool wished = instance.wishes.wishes(id, j);
      if (!wished && w != 0.0) {
        violate("W support mismatch: positive priority for unwished " + topic_tag(j) +
                " of " + student_tag(id));
      } else if (wished && w <= 0.0) {
        violate("W support mismatch: non-positive priority for wished " + topic_tag(j) +
                " of " + student_tag(id));
      }
    }
  }

  // Priority order against registration data, per topic column.
  if (instance.has_registration_times) {
    for (TopicId j = 1; j <= m; ++j) {
      std::vector<StudentId> choosers;
      for (StudentId id = 1; id <= n; ++id) {
        if (instance.wishes.wishes(id, j)) choosers.push_back(id);
      }
      std::sort(choosers.begin(), choosers.end(), [&](StudentId a, StudentId b) {
        return instance.student(a).registration < instance.student(b).registration;
      });
      for (std::size_t q = 1; q < choosers.size(); ++q) {
        const Student& earlier = instance.student(choosers[q - 1]);
        const Student& later = instance.student(choosers[q]);
        if (earlier.registration == later.registration) {
          violate("non-distinct registration times in " + topic_tag(j) + " (" +
                  student_tag(earlier.id) + ", " + student_tag(later.id) + ")");
        } else if (instance.priority.at(earlier.id, j) <= instance.priority.at(later.id, j)) {
          violate("W ordering violation in " + topic_tag(j) + ": earlier registration of " +
                  student_tag(earlier.id) + " must outrank " + student_tag(later.id));
        }
      }
    }
  }

  return report;
}

FeasibilityVerdict check_feasibility(int n, Bounds bounds, int topics) {
  FeasibilityVerdict verdict;
  if (!bounds.valid() || n < 0 || topics < 1) return verdict;

  int k_min;
  if (bounds.upper == 0) {
    k_min = (n == 0) ? 1 : topics + 1;  // n > 0 cannot fit groups of size 0
  } else {
    k_min = static_cast<int>((static_cast<std::int64_t>(n) + bounds.upper - 1) / bounds.upper);
    k_min = std::max(1, k_min);
  }
  const int k_max = (bounds.lower == 0) ? topics : std::min(topics, n / bounds.lower);

  if (k_min <= k_max) {
    verdict.feasible = true;
    verdict.k_min = k_min;
    verdict.k_max = k_max;
  }
  return verdict;
}

bool grouping_is_valid(const Grouping& grouping, const Instance& instance) {
  std::vector<char> seen(static_cast<std::size_t>(instance.size()) + 1, 0);
  for (const auto& [topic, members] : grouping) {
    if (topic < 1 || topic > instance.topic_count) return false;
    for (StudentId id : members) {
      if (id < 1 || id > instance.size()) return false;
      if (seen[static_cast<std::size_t>(id)]) return false;
      seen[static_cast<std::size_t>(id)] = 1;
    }
  }
  return true;
}

bool is_complete_partition(const Grouping& grouping, const Instance& instance) {
  if (!grouping_is_valid(grouping, instance)) return false;
  std::size_t assigned = 0;
  for (const auto& [topic, members] : grouping) {
    const int size = static_cast<int>(members.size());
    if (size < instance.bounds.lower || size > instance.bounds.upper) return false;
    assigned += members.size();
  }
  return assigned == static_cast<std::size_t>(instance.size());
}

}  // namespace mfc
