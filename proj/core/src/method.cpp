#include "mfc/method.hpp"

#include "mfc/errors.hpp"
#include "mfc/oracle.hpp"

namespace mfc {

std::string method_name(Method method) {
  switch (method) {
    case Method::Heuristic: return "heuristic";
    case Method::Knapsack: return "knapsack";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "heuristic") return Method::Heuristic;
  if (name == "knapsack") return Method::Knapsack;
  if (name == "oracle") return Method::Oracle;
  throw IngestError("unknown method '" + name + "' (expected heuristic|knapsack|oracle)");
}

SolveResult run_method(const Instance& instance, Method method, const SolveOptions& options) {
  switch (method) {
    case Method::Heuristic:
      return heuristic_solve(instance, HeuristicConfig{options.balance_tiebreak});
    case Method::Knapsack:
      return knapsack_solve(
          instance, KnapsackConfig{options.balance_tiebreak, options.mod_basis,
                                   options.topic_order});
    case Method::Oracle: {
      OracleResult oracle = oracle_solve(instance, options.oracle_max_states);
      return {std::move(oracle.grouping), std::move(oracle.metrics)};
    }
  }
  throw IngestError("unknown method");
}

}  // namespace mfc
