#pragma once

#include <cstdint>
#include <string>

#include "mfc/heuristic.hpp"
#include "mfc/knapsack.hpp"
#include "mfc/types.hpp"

namespace mfc {

enum class Method { Heuristic, Knapsack, Oracle };

std::string method_name(Method method);
Method parse_method(const std::string& name);  // throws IngestError

struct SolveOptions {
  bool balance_tiebreak = true;
  ModBasis mod_basis = ModBasis::Unassigned;
  TopicOrder topic_order = TopicOrder::Index;
  std::uint64_t oracle_max_states = 10'000'000;
};

SolveResult run_method(const Instance& instance, Method method,
                       const SolveOptions& options = {});

}  // namespace mfc
