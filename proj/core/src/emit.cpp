#include "mfc/emit.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "mfc/errors.hpp"
#include "mfc/validation.hpp"
#include "mfc/welfare.hpp"
#include "text_util.hpp"

namespace mfc {

namespace {

using OrderedJson = nlohmann::ordered_json;

// Non-finite doubles serialize to null in nlohmann/json; store them as
// strings instead so a huge nash_product survives the round trip.
OrderedJson json_number(double value) {
  if (std::isfinite(value)) return value;
  return detail::format_double(value);
}

double read_number(const nlohmann::json& value) {
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    double out = 0.0;
    if (!detail::parse_double(text, out)) {
      throw IngestError("unparseable numeric field '" + text + "'");
    }
    return out;
  }
  return value.get<double>();
}

double group_welfare_sum(TopicId topic, const std::vector<StudentId>& members,
                         const WelfareMatrix& welfare) {
  double sum = 0.0;
  for (StudentId id : members) sum += welfare.values.at(id, topic);
  return sum;
}

}  // namespace

Grouping GroupingDocument::to_grouping() const {
  Grouping grouping;
  for (const GroupEntry& entry : groups) grouping[entry.topic] = entry.members;
  return grouping;
}

std::string grouping_json(const Grouping& grouping, const MetricsReport& metrics,
                          const Instance& instance, const std::string& method) {
  const WelfareMatrix welfare = build_welfare(instance);

  OrderedJson doc;
  doc["method"] = method;
  OrderedJson params;
  params["alpha"] = json_number(instance.alpha);
  params["beta"] = json_number(instance.beta);
  params["C_l"] = instance.bounds.lower;
  params["C_u"] = instance.bounds.upper;
  doc["params"] = std::move(params);

  OrderedJson groups = OrderedJson::array();
  for (const auto& [topic, members] : grouping) {
    OrderedJson entry;
    entry["topic"] = topic;
    entry["members"] = members;
    entry["balance"] = json_number(group_balance(members, instance));
    entry["welfare_sum"] = json_number(group_welfare_sum(topic, members, welfare));
    groups.push_back(std::move(entry));
  }
  doc["groups"] = std::move(groups);

  OrderedJson metrics_obj;
  metrics_obj["k"] = metrics.group_count;
  metrics_obj["nash_product"] = json_number(metrics.nash_product);
  metrics_obj["nash_normalized"] = json_number(metrics.nash_normalized);
  metrics_obj["balance"] = json_number(metrics.balance);
  metrics_obj["satisfaction"] = json_number(metrics.satisfaction);
  metrics_obj["min_card"] = metrics.min_cardinality();
  metrics_obj["max_card"] = metrics.max_cardinality();
  doc["metrics"] = std::move(metrics_obj);

  return doc.dump(2) + "\n";
}

std::string grouping_csv(const Grouping& grouping, const MetricsReport& metrics,
                         const Instance& instance) {
  (void)metrics;
  const WelfareMatrix welfare = build_welfare(instance);
  std::string out = "topic,size,balance,welfare_sum,members\n";
  for (const auto& [topic, members] : grouping) {
    out += std::to_string(topic);
    out += ',' + std::to_string(members.size());
    out += ',' + detail::format_double(group_balance(members, instance));
    out += ',' + detail::format_double(group_welfare_sum(topic, members, welfare));
    out += ',';
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(members[i]);
    }
    out += '\n';
  }
  return out;
}

void emit_grouping(const Grouping& grouping, const MetricsReport& metrics,
                   const Instance& instance, const std::string& method,
                   const std::filesystem::path& path, EmitFormat format) {
  if (!is_complete_partition(grouping, instance)) {
    throw std::invalid_argument(
        "refusing to emit: grouping is not a complete in-bounds partition");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestError("cannot write file: " + path.string());
  out << (format == EmitFormat::Json ? grouping_json(grouping, metrics, instance, method)
                                     : grouping_csv(grouping, metrics, instance));
  if (!out) throw IngestError("write failed: " + path.string());
}

GroupingDocument read_grouping_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open file: " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IngestError("invalid grouping document " + path.string() + ": " + e.what());
  }

  GroupingDocument out;
  try {
    out.method = doc.at("method").get<std::string>();
    const auto& params = doc.at("params");
    out.alpha = read_number(params.at("alpha"));
    out.beta = read_number(params.at("beta"));
    out.bounds.lower = params.at("C_l").get<int>();
    out.bounds.upper = params.at("C_u").get<int>();
    for (const auto& entry : doc.at("groups")) {
      GroupingDocument::GroupEntry group;
      group.topic = entry.at("topic").get<TopicId>();
      group.members = entry.at("members").get<std::vector<StudentId>>();
      group.balance = read_number(entry.at("balance"));
      group.welfare_sum = read_number(entry.at("welfare_sum"));
      out.groups.push_back(std::move(group));
    }
    const auto& metrics = doc.at("metrics");
    out.metrics.group_count = metrics.at("k").get<int>();
    out.metrics.nash_product = read_number(metrics.at("nash_product"));
    out.metrics.nash_normalized = read_number(metrics.at("nash_normalized"));
    out.metrics.balance = read_number(metrics.at("balance"));
    out.metrics.satisfaction = read_number(metrics.at("satisfaction"));
    for (const auto& entry : out.groups) {
      out.metrics.cardinalities.push_back(static_cast<int>(entry.members.size()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IngestError("malformed grouping document " + path.string() + ": " + e.what());
  }
  return out;
}

}  // namespace mfc
