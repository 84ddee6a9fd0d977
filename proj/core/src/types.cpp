#include "mfc/types.hpp"

#include <algorithm>
#include <string>

namespace mfc {

std::string serialize_grouping(const Grouping& grouping) {
  std::string out;
  for (const auto& [topic, members] : grouping) {
    out += 't';
    out += std::to_string(topic);
    out += ':';
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(members[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<StudentId> assigned_students(const Grouping& grouping) {
  std::vector<StudentId> ids;
  for (const auto& [topic, members] : grouping) {
    ids.insert(ids.end(), members.begin(), members.end());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace mfc
