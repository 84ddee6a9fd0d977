#include "mfc/sweep.hpp"

#include "mfc/errors.hpp"
#include "mfc/validation.hpp"
#include "text_util.hpp"

namespace mfc {

SweepResult run_sweep(const Instance& instance, const SweepConfig& config) {
  if (config.methods.empty()) throw IngestError("sweep needs a non-empty method list");
  if (config.cl_from > config.cl_to) throw IngestError("empty C^l range");
  if (config.cl_from < 0) throw IngestError("C^l must be non-negative");
  if (config.cu_offset < 0) throw IngestError("C^u rule must yield C^u >= C^l");

  SweepResult result;
  for (int cl = config.cl_from; cl <= config.cl_to; ++cl) {
    const Bounds bounds{cl, cl + config.cu_offset};
    Instance work = instance;
    work.bounds = bounds;
    work.alpha = config.alpha;
    work.beta = config.beta;
    const bool feasible =
        check_feasibility(work.size(), bounds, work.topic_count).feasible;
    for (Method method : config.methods) {
      SweepRow row;
      row.method = method;
      row.c_l = bounds.lower;
      row.c_u = bounds.upper;
      row.feasible = feasible;
      if (feasible) {
        row.metrics = run_method(work, method, config.options).metrics;
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = metrics_csv_header() + ",status\n";
  for (const SweepRow& row : result.rows) {
    if (row.feasible) {
      out += metrics_csv_row(method_name(row.method), Bounds{row.c_l, row.c_u}, row.metrics);
      out += ",ok\n";
    } else {
      out += method_name(row.method) + ',' + std::to_string(row.c_l) + ',' +
             std::to_string(row.c_u) + ",,,,,,,,infeasible\n";
    }
  }
  return out;
}

std::string sweep_json(const SweepResult& result) {
  std::string out = "[";
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const SweepRow& row = result.rows[i];
    if (i > 0) out += ',';
    if (row.feasible) {
      std::string obj = metrics_json(method_name(row.method), Bounds{row.c_l, row.c_u},
                                     row.metrics);
      obj.back() = ',';  // replace closing brace
      out += obj + "\"status\":\"ok\"}";
    } else {
      out += "{\"method\":\"" + method_name(row.method) + "\",\"C_l\":" +
             std::to_string(row.c_l) + ",\"C_u\":" + std::to_string(row.c_u) +
             ",\"status\":\"infeasible\"}";
    }
  }
  out += "]";
  return out;
}

}  // namespace mfc
