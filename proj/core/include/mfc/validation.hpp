#pragma once

#include <string>
#include <vector>

#include "mfc/types.hpp"

namespace mfc {

// Report-style validation result. `violations` are hard invariant breaks;
// `notes` record ingestion-time resolutions (e.g. registration ties broken
// by student id).
struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool pass() const { return violations.empty(); }
};

// Feasible group counts k for splitting n students into groups of size
// [lower, upper] using at most m topics: k_min..k_max, empty if infeasible.
struct FeasibilityVerdict {
  bool feasible = false;
  int k_min = 0;
  int k_max = 0;

  std::string describe(int n, Bounds bounds, int topics) const;
};

// Checks every structural invariant: contiguous ids, binary categories,
// distinct in-range wishes, V/W support and value laws, and (when real
// registration data is present) priority order consistency per topic.
ValidationReport validate_instance(const Instance& instance);

// Feasible iff some k with 1 <= k <= topics satisfies k*lower <= n <= k*upper.
FeasibilityVerdict check_feasibility(int n, Bounds bounds, int topics);

// True iff every student appears exactly once and every group size lies in
// [bounds.lower, bounds.upper].
bool is_complete_partition(const Grouping& grouping, const Instance& instance);

// Structural sanity of a grouping against an instance: known ids, topics in
// range, no student in two groups.
bool grouping_is_valid(const Grouping& grouping, const Instance& instance);

}  // namespace mfc
