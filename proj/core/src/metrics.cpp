#include "mfc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mfc/welfare.hpp"
#include "text_util.hpp"

namespace mfc {

namespace {

double group_welfare_sum(TopicId topic, const std::vector<StudentId>& members,
                         const WelfareMatrix& welfare) {
  double sum = 0.0;
  for (StudentId id : members) sum += welfare.values.at(id, topic);
  return sum;
}

}  // namespace

int MetricsReport::min_cardinality() const {
  return cardinalities.empty() ? 0 : *std::min_element(cardinalities.begin(), cardinalities.end());
}

int MetricsReport::max_cardinality() const {
  return cardinalities.empty() ? 0 : *std::max_element(cardinalities.begin(), cardinalities.end());
}

double nash_product(const Grouping& grouping, const WelfareMatrix& welfare) {
  double product = 1.0;
  for (const auto& [topic, members] : grouping) {
    product *= 1.0 + group_welfare_sum(topic, members, welfare);
  }
  return product;
}

double nash_log(const Grouping& grouping, const WelfareMatrix& welfare) {
  double sum = 0.0;
  for (const auto& [topic, members] : grouping) {
    sum += std::log1p(group_welfare_sum(topic, members, welfare));
  }
  return sum;
}

double nash_normalized(double product, int group_count) {
  if (group_count >= 2) return std::log(product) / std::log(static_cast<double>(group_count));
  return std::log(product);
}

double balance_from_counts(std::int64_t count0, std::int64_t count1) {
  if (count0 == 0 || count1 == 0) return 0.0;
  return count0 < count1 ? static_cast<double>(count0) / static_cast<double>(count1)
                         : static_cast<double>(count1) / static_cast<double>(count0);
}

double group_balance(std::span<const StudentId> members, const Instance& instance) {
  if (members.empty()) throw std::invalid_argument("balance of an empty group is undefined");
  std::int64_t count0 = 0, count1 = 0;
  for (StudentId id : members) {
    (instance.student(id).category == 0 ? count0 : count1)++;
  }
  return balance_from_counts(count0, count1);
}

double grouping_balance(const Grouping& grouping, const Instance& instance) {
  double min_balance = grouping.empty() ? 0.0 : 1.0;
  for (const auto& [topic, members] : grouping) {
    min_balance = std::min(min_balance, group_balance(members, instance));
  }
  return min_balance;
}

double satisfaction(const Grouping& grouping, const Instance& instance) {
  if (instance.size() == 0) throw std::invalid_argument("satisfaction undefined for n == 0");
  std::int64_t satisfied = 0;
  for (const auto& [topic, members] : grouping) {
    for (StudentId id : members) {
      if (instance.wishes.wishes(id, topic)) ++satisfied;
    }
  }
  return static_cast<double>(satisfied) / instance.size();
}

MetricsReport compute_metrics(const Grouping& grouping, const Instance& instance,
                              const WelfareMatrix& welfare) {
  MetricsReport report;
  report.group_count = static_cast<int>(grouping.size());
  report.empty_grouping = grouping.empty();
  report.cardinalities.reserve(grouping.size());
  for (const auto& [topic, members] : grouping) {
    report.cardinalities.push_back(static_cast<int>(members.size()));
  }
  report.nash_product = nash_product(grouping, welfare);
  report.nash_log = nash_log(grouping, welfare);
  report.k_warning = report.group_count <= 1;
  report.nash_normalized =
      report.group_count >= 2
          ? report.nash_log / std::log(static_cast<double>(report.group_count))
          : report.nash_log;
  report.balance = grouping_balance(grouping, instance);
  report.satisfaction = satisfaction(grouping, instance);
  return report;
}

MetricsReport compute_metrics(const Grouping& grouping, const Instance& instance) {
  return compute_metrics(grouping, instance, build_welfare(instance));
}

std::string metrics_csv_header() {
  return "method,C_l,C_u,k,nash_product,nash_normalized,balance,satisfaction,"
         "min_card,max_card";
}

std::string metrics_csv_row(const std::string& method, Bounds bounds,
                            const MetricsReport& report) {
  using detail::format_double;
  std::string row = method;
  row += ',' + std::to_string(bounds.lower);
  row += ',' + std::to_string(bounds.upper);
  row += ',' + std::to_string(report.group_count);
  row += ',' + format_double(report.nash_product);
  row += ',' + format_double(report.nash_normalized);
  row += ',' + format_double(report.balance);
  row += ',' + format_double(report.satisfaction);
  row += ',' + std::to_string(report.min_cardinality());
  row += ',' + std::to_string(report.max_cardinality());
  return row;
}

namespace {

// Non-finite doubles (a nash_product past double range) are emitted as
// strings to keep the document valid JSON.
std::string json_number(double value) {
  if (std::isfinite(value)) return detail::format_double(value);
  return "\"" + detail::format_double(value) + "\"";
}

}  // namespace

std::string metrics_json(const std::string& method, Bounds bounds,
                         const MetricsReport& report) {
  std::string out = "{\"method\":\"" + method + "\"";
  out += ",\"C_l\":" + std::to_string(bounds.lower);
  out += ",\"C_u\":" + std::to_string(bounds.upper);
  out += ",\"k\":" + std::to_string(report.group_count);
  out += ",\"nash_product\":" + json_number(report.nash_product);
  out += ",\"nash_normalized\":" + json_number(report.nash_normalized);
  out += ",\"balance\":" + json_number(report.balance);
  out += ",\"satisfaction\":" + json_number(report.satisfaction);
  out += ",\"min_card\":" + std::to_string(report.min_cardinality());
  out += ",\"max_card\":" + std::to_string(report.max_cardinality());
  out += "}";
  return out;
}

}  // namespace mfc
