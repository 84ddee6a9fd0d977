#pragma once

#include <span>
#include <string>
#include <vector>

#include "mfc/types.hpp"

namespace mfc {

struct MetricsReport {
  double nash_product = 1.0;     // product over groups of (1 + group welfare sum)
  double nash_log = 0.0;         // ln of the product, overflow-safe
  double nash_normalized = 0.0;  // log base k of the product (ln for k <= 1)
  double balance = 0.0;
  double satisfaction = 0.0;
  int group_count = 0;
  std::vector<int> cardinalities;  // group sizes in topic order
  bool k_warning = false;          // k <= 1: normalization fell back to ln
  bool empty_grouping = false;

  int min_cardinality() const;
  int max_cardinality() const;
};

// Product over groups of (1 + sum of members' welfare for the group topic).
// An empty grouping yields 1 (callers flag it via MetricsReport).
double nash_product(const Grouping& grouping, const WelfareMatrix& welfare);

// Sum over groups of log1p(group welfare sum) == ln(nash_product), stable
// for products beyond double range.
double nash_log(const Grouping& grouping, const WelfareMatrix& welfare);

// log base k of the product for k >= 2; natural log for degenerate k <= 1
// (callers flag the fallback).
double nash_normalized(double nash_product, int group_count);

// min(c0/c1, c1/c0); zero when either category is absent.
double balance_from_counts(std::int64_t count0, std::int64_t count1);

// Balance of one group. Throws std::invalid_argument on an empty group.
double group_balance(std::span<const StudentId> members, const Instance& instance);

// Minimum group balance over the grouping; zero groups yield 0. Throws on an
// empty group.
double grouping_balance(const Grouping& grouping, const Instance& instance);

// Fraction of students whose assigned topic appears anywhere in their wish
// row; unassigned students count as unsatisfied. Throws if n == 0.
double satisfaction(const Grouping& grouping, const Instance& instance);

MetricsReport compute_metrics(const Grouping& grouping, const Instance& instance,
                              const WelfareMatrix& welfare);
MetricsReport compute_metrics(const Grouping& grouping, const Instance& instance);

// Flat serializations; field order:
// method,C_l,C_u,k,nash_product,nash_normalized,balance,satisfaction,min_card,max_card
std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& method, Bounds bounds,
                            const MetricsReport& report);
std::string metrics_json(const std::string& method, Bounds bounds,
                         const MetricsReport& report);

}  // namespace mfc
