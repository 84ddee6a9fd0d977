#pragma once

#include <string>
#include <vector>

#include "mfc/method.hpp"
#include "mfc/metrics.hpp"
#include "mfc/types.hpp"

namespace mfc {

struct SweepConfig {
  int cl_from = 2;
  int cl_to = 8;          // inclusive
  int cu_offset = 1;      // C^u = C^l + cu_offset
  std::vector<Method> methods;
  double alpha = 1.0;
  double beta = 1.0;
  SolveOptions options;
};

struct SweepRow {
  Method method = Method::Heuristic;
  int c_l = 0;
  int c_u = 0;
  bool feasible = false;
  MetricsReport metrics;  // defaulted when infeasible
};

struct SweepResult {
  std::vector<SweepRow> rows;  // C^l ascending, methods in config order
};

// Solves the instance for every (C^l, method) point; infeasible bounds are
// recorded as flagged rows rather than errors. Throws IngestError on an empty
// method list or an empty/invalid range.
SweepResult run_sweep(const Instance& instance, const SweepConfig& config);

// Long-format CSV, one row per method x C^l, with a trailing status column
// (ok | infeasible) after the metric fields.
std::string sweep_csv(const SweepResult& result);
std::string sweep_json(const SweepResult& result);

}  // namespace mfc
