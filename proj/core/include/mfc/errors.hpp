#pragma once

#include <stdexcept>
#include <string>

namespace mfc {

// Process exit codes used by the CLI for the corresponding error classes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 2,
  kExitIngest = 3,
  kExitGuard = 4,
};

/// Input could not be parsed or violates schema/invariant requirements.
class IngestError : public std::runtime_error {
 public:
  explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

/// No grouping can satisfy the cardinality bounds for the given n, m.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal safety valve tripped (iteration budget, state budget).
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mfc
