#include "mfc/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mfc/errors.hpp"
#include "mfc/welfare.hpp"
#include "text_util.hpp"

namespace mfc {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  std::size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

// Comma split with minimal double-quote support ("" escapes a quote).
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

// Howard Hinnant's days-from-civil, for timezone-free timestamp keys.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy =
      static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool parse_fixed_digits(std::string_view text, std::size_t pos, std::size_t count, int& out) {
  if (pos + count > text.size()) return false;
  int value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char c = text[pos + i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

// Registration key: plain integer rank, or ISO-8601 "YYYY-MM-DD[ T]HH:MM[:SS]"
// mapped to seconds on a timezone-free calendar.
std::int64_t parse_registration(const std::string& raw, StudentId id) {
  const std::string text = trim(raw);
  long long as_int = 0;
  if (detail::parse_int(text, as_int)) return as_int;

  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  const bool date_ok = parse_fixed_digits(text, 0, 4, year) && text.size() > 4 &&
                       text[4] == '-' && parse_fixed_digits(text, 5, 2, month) &&
                       text.size() > 7 && text[7] == '-' && parse_fixed_digits(text, 8, 2, day);
  if (!date_ok || month < 1 || month > 12 || day < 1 || day > 31) {
    throw IngestError("unparseable registration time '" + text + "' for student " +
                      std::to_string(id));
  }
  if (text.size() > 10) {
    if ((text[10] != ' ' && text[10] != 'T') || !parse_fixed_digits(text, 11, 2, hour) ||
        text.size() < 16 || text[13] != ':' || !parse_fixed_digits(text, 14, 2, minute)) {
      throw IngestError("unparseable registration time '" + text + "' for student " +
                        std::to_string(id));
    }
    if (text.size() > 16) {
      if (text[16] != ':' || !parse_fixed_digits(text, 17, 2, second) || text.size() != 19) {
        throw IngestError("unparseable registration time '" + text + "' for student " +
                          std::to_string(id));
      }
    }
  }
  return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
}

struct Columns {
  int id = -1;
  int name = -1;
  int protected_attr = -1;
  int time = -1;
  std::vector<int> wish;      // index by rank - 1
  std::vector<int> priority;  // index by topic - 1
};

Columns resolve_columns(const std::vector<std::string>& header, const DatasetSchema& schema) {
  Columns cols;
  std::vector<std::pair<int, int>> wish_cols;      // (rank, column)
  std::vector<std::pair<int, int>> priority_cols;  // (topic, column)
  const std::string id_name = lower(schema.id_column);
  const std::string name_name = lower(schema.name_column);
  const std::string protected_name = lower(schema.protected_column);
  const std::string time_name = lower(schema.time_column);
  const std::string wish_prefix = lower(schema.wish_prefix);
  const std::string priority_prefix = lower(schema.priority_prefix);

  for (int c = 0; c < static_cast<int>(header.size()); ++c) {
    const std::string name = lower(trim(header[static_cast<std::size_t>(c)]));
    if (name == id_name) {
      cols.id = c;
    } else if (name == name_name) {
      cols.name = c;
    } else if (name == protected_name) {
      cols.protected_attr = c;
    } else if (name == time_name) {
      cols.time = c;
    } else {
      auto suffix_index = [&](const std::string& prefix) -> int {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return 0;
        long long idx = 0;
        if (!detail::parse_int(std::string_view(name).substr(prefix.size()), idx) || idx < 1) {
          return 0;
        }
        return static_cast<int>(idx);
      };
      if (const int rank = suffix_index(wish_prefix); rank != 0) {
        wish_cols.emplace_back(rank, c);
      } else if (const int topic = suffix_index(priority_prefix); topic != 0) {
        priority_cols.emplace_back(topic, c);
      }
    }
  }

  if (cols.id < 0) throw IngestError("missing column '" + schema.id_column + "'");
  if (cols.protected_attr < 0) {
    throw IngestError("missing column '" + schema.protected_column + "'");
  }
  if (wish_cols.empty()) {
    throw IngestError("missing wish columns '" + schema.wish_prefix + "1..'");
  }

  auto contiguous = [](std::vector<std::pair<int, int>>& indexed, const std::string& what) {
    std::sort(indexed.begin(), indexed.end());
    std::vector<int> out;
    for (std::size_t i = 0; i < indexed.size(); ++i) {
      if (indexed[i].first != static_cast<int>(i) + 1) {
        throw IngestError(what + " columns are not contiguous from 1");
      }
      out.push_back(indexed[i].second);
    }
    return out;
  };
  cols.wish = contiguous(wish_cols, "wish");
  if (!priority_cols.empty()) cols.priority = contiguous(priority_cols, "priority");
  return cols;
}

struct RawRow {
  long long id = 0;
  std::string name;
  std::string protected_value;
  std::string time_value;
  std::vector<int> wishes;
  std::vector<double> priorities;
};

}  // namespace

LoadedInstance load_dataset(const std::filesystem::path& path, const DatasetSchema& schema) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open dataset file: " + path.string());

  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    header = split_csv_line(line);
    break;
  }
  if (header.empty()) throw IngestError("dataset file has no header row: " + path.string());

  const Columns cols = resolve_columns(header, schema);
  const int h = static_cast<int>(cols.wish.size());

  std::vector<RawRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw IngestError("row " + std::to_string(rows.size() + 2) + " has " +
                        std::to_string(fields.size()) + " fields, header has " +
                        std::to_string(header.size()));
    }
    RawRow row;
    if (!detail::parse_int(trim(fields[static_cast<std::size_t>(cols.id)]), row.id)) {
      throw IngestError("unparseable student id '" +
                        fields[static_cast<std::size_t>(cols.id)] + "'");
    }
    if (cols.name >= 0) row.name = trim(fields[static_cast<std::size_t>(cols.name)]);
    row.protected_value = trim(fields[static_cast<std::size_t>(cols.protected_attr)]);
    if (cols.time >= 0) row.time_value = trim(fields[static_cast<std::size_t>(cols.time)]);
    for (int p = 0; p < h; ++p) {
      long long wish = 0;
      const std::string& field = fields[static_cast<std::size_t>(cols.wish[static_cast<std::size_t>(p)])];
      if (!detail::parse_int(trim(field), wish)) {
        throw IngestError("unparseable wish '" + field + "' for student " +
                          std::to_string(row.id));
      }
      row.wishes.push_back(static_cast<int>(wish));
    }
    for (int t = 0; t < static_cast<int>(cols.priority.size()); ++t) {
      double value = 0.0;
      const std::string& field =
          fields[static_cast<std::size_t>(cols.priority[static_cast<std::size_t>(t)])];
      if (!detail::parse_double(trim(field), value)) {
        throw IngestError("unparseable priority '" + field + "' for student " +
                          std::to_string(row.id));
      }
      row.priorities.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IngestError("dataset file has no data rows: " + path.string());

  // Unique integer ids, remapped to 1..n in ascending order.
  std::sort(rows.begin(), rows.end(),
            [](const RawRow& a, const RawRow& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].id == rows[i - 1].id) {
      throw IngestError("duplicate student id " + std::to_string(rows[i].id));
    }
  }

  LoadedInstance loaded;
  Instance& instance = loaded.instance;
  const int n = static_cast<int>(rows.size());

  int m = schema.topics_override;
  if (m <= 0) {
    if (!cols.priority.empty()) {
      m = static_cast<int>(cols.priority.size());
    } else {
      for (const RawRow& row : rows) {
        for (int wish : row.wishes) m = std::max(m, wish);
      }
    }
  }

  // Protected attribute: accept 0/1 directly, otherwise map the (at most
  // two) distinct values alphabetically to 0 and 1.
  std::vector<std::string> distinct;
  for (const RawRow& row : rows) {
    if (std::find(distinct.begin(), distinct.end(), row.protected_value) == distinct.end()) {
      distinct.push_back(row.protected_value);
    }
  }
  std::sort(distinct.begin(), distinct.end());
  if (distinct.size() > 2) {
    throw IngestError("protected attribute has " + std::to_string(distinct.size()) +
                      " distinct values; a binary attribute is required");
  }
  const bool numeric_binary =
      (distinct.size() == 1 && (distinct[0] == "0" || distinct[0] == "1")) ||
      (distinct.size() == 2 && distinct[0] == "0" && distinct[1] == "1");
  if (numeric_binary) {
    instance.category_labels = {"0", "1"};
  } else {
    instance.category_labels[0] = distinct[0];
    instance.category_labels[1] = distinct.size() == 2 ? distinct[1] : "";
  }
  auto category_of = [&](const std::string& value) {
    if (numeric_binary) return value == "1" ? 1 : 0;
    return value == instance.category_labels[1] ? 1 : 0;
  };

  const bool has_time = cols.time >= 0;
  if (!has_time && cols.priority.empty()) {
    throw IngestError("no priority source: dataset needs a '" + schema.time_column +
                      "' column or '" + schema.priority_prefix + "1..' columns");
  }

  instance.topic_count = m;
  instance.wishes = WishMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(h));
  instance.has_registration_times = has_time;

  std::vector<std::int64_t> time_keys(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const RawRow& row = rows[static_cast<std::size_t>(i)];
    Student student;
    student.id = i + 1;
    student.name = row.name;
    student.category = category_of(row.protected_value);
    instance.students.push_back(std::move(student));
    for (int p = 0; p < h; ++p) {
      const int wish = row.wishes[static_cast<std::size_t>(p)];
      if (wish < 1 || wish > m) {
        throw IngestError("invalid topic index " + std::to_string(wish) + " for student " +
                          std::to_string(row.id) + " (topics are 1.." + std::to_string(m) + ")");
      }
      instance.wishes.at(i + 1, p + 1) = wish;
    }
    if (has_time) {
      time_keys[static_cast<std::size_t>(i)] = parse_registration(row.time_value, i + 1);
    }
  }

  // Registration ranks: by time then id; ties are legal in the file but are
  // broken deterministically and recorded.
  if (has_time) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (time_keys[static_cast<std::size_t>(a)] != time_keys[static_cast<std::size_t>(b)]) {
        return time_keys[static_cast<std::size_t>(a)] < time_keys[static_cast<std::size_t>(b)];
      }
      return a < b;
    });
    for (int rank = 0; rank < n; ++rank) {
      instance.students[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])]
          .registration = rank + 1;
      if (rank > 0 &&
          time_keys[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] ==
              time_keys[static_cast<std::size_t>(order[static_cast<std::size_t>(rank - 1)])]) {
        loaded.report.notes.push_back(
            "registration tie between students " +
            std::to_string(order[static_cast<std::size_t>(rank - 1)] + 1) + " and " +
            std::to_string(order[static_cast<std::size_t>(rank)] + 1) +
            " resolved by ascending id");
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      instance.students[static_cast<std::size_t>(i)].registration = i + 1;
    }
  }

  instance.interest = build_interest_matrix(instance.wishes, h, m);
  if (!cols.priority.empty()) {
    // W verbatim; consistency with wishes/registration is validated below.
    instance.priority = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        instance.priority.at(i + 1, j + 1) = rows[static_cast<std::size_t>(i)]
            .priorities[static_cast<std::size_t>(j)];
      }
    }
  } else {
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      ranks[static_cast<std::size_t>(i)] =
          instance.students[static_cast<std::size_t>(i)].registration;
    }
    instance.priority = build_priority_matrix(instance.wishes, ranks, m);
  }

  instance.bounds = Bounds{0, n};

  ValidationReport validation = validate_instance(instance);
  for (std::string& v : validation.violations) {
    loaded.report.violations.push_back(std::move(v));
  }
  return loaded;
}

std::string instance_csv(const Instance& instance, const std::string& header_comment) {
  const int n = instance.size();
  const int m = instance.topic_count;
  const int h = instance.wish_count();
  const bool with_names = std::any_of(instance.students.begin(), instance.students.end(),
                                      [](const Student& s) { return !s.name.empty(); });

  std::string out;
  if (!header_comment.empty()) {
    out += "# " + header_comment + "\n";
  }
  out += "ID";
  if (with_names) out += ",Name";
  out += ",Gender";
  for (int p = 1; p <= h; ++p) out += ",wish" + std::to_string(p);
  if (instance.has_registration_times) out += ",Time";
  for (int j = 1; j <= m; ++j) out += ",T" + std::to_string(j);
  out += '\n';

  for (StudentId id = 1; id <= n; ++id) {
    const Student& s = instance.student(id);
    out += std::to_string(id);
    if (with_names) {
      out += ',';
      const bool needs_quotes = s.name.find_first_of(",\"") != std::string::npos;
      if (needs_quotes) {
        out += '"';
        for (char c : s.name) {
          if (c == '"') out += '"';
          out += c;
        }
        out += '"';
      } else {
        out += s.name;
      }
    }
    out += ',' + instance.category_labels[static_cast<std::size_t>(s.category)];
    for (int p = 1; p <= h; ++p) out += ',' + std::to_string(instance.wishes.at(id, p));
    if (instance.has_registration_times) out += ',' + std::to_string(s.registration);
    for (int j = 1; j <= m; ++j) out += ',' + detail::format_double(instance.priority.at(id, j));
    out += '\n';
  }
  return out;
}

void save_instance(const Instance& instance, const std::filesystem::path& path,
                   const std::string& header_comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestError("cannot write file: " + path.string());
  out << instance_csv(instance, header_comment);
  if (!out) throw IngestError("write failed: " + path.string());
}

}  // namespace mfc
