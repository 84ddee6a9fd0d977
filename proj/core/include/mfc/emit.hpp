#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mfc/metrics.hpp"
#include "mfc/types.hpp"

namespace mfc {

enum class EmitFormat { Json, Csv };

// Parsed form of an emitted grouping document, for round-tripping.
struct GroupingDocument {
  std::string method;
  double alpha = 1.0;
  double beta = 1.0;
  Bounds bounds;
  struct GroupEntry {
    TopicId topic = 0;
    std::vector<StudentId> members;
    double balance = 0.0;
    double welfare_sum = 0.0;
  };
  std::vector<GroupEntry> groups;
  MetricsReport metrics;

  Grouping to_grouping() const;
};

// JSON document {method, params, groups: [{topic, members, balance,
// welfare_sum}], metrics} with stable key order.
std::string grouping_json(const Grouping& grouping, const MetricsReport& metrics,
                          const Instance& instance, const std::string& method);

// Group-level CSV: topic,size,balance,welfare_sum,members (members space-joined).
std::string grouping_csv(const Grouping& grouping, const MetricsReport& metrics,
                         const Instance& instance);

// Writes the grouping document; refuses groupings that are not complete
// in-bounds partitions of the instance (throws std::invalid_argument).
void emit_grouping(const Grouping& grouping, const MetricsReport& metrics,
                   const Instance& instance, const std::string& method,
                   const std::filesystem::path& path, EmitFormat format);

// Reads back a JSON grouping document.
GroupingDocument read_grouping_document(const std::filesystem::path& path);

}  // namespace mfc
