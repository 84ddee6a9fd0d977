#pragma once

#include <filesystem>
#include <string>

#include "mfc/types.hpp"
#include "mfc/validation.hpp"

namespace mfc {

// Column layout of a roster file: comma-separated, UTF-8, one header row.
// Lines starting with '#' are skipped. Wish columns are wish1..wishH
// (contiguous); priority columns are T1..Tm (contiguous, prefix + digits,
// so "Time" never matches). Column name matching is case-insensitive.
struct DatasetSchema {
  std::string id_column = "ID";
  std::string name_column = "Name";        // optional in the file
  std::string protected_column = "Gender";
  std::string wish_prefix = "wish";
  std::string time_column = "Time";        // optional if T columns present
  std::string priority_prefix = "T";
  int topics_override = 0;                 // force m; 0 = infer from T columns or wishes
};

struct LoadedInstance {
  Instance instance;
  ValidationReport report;  // ingestion notes plus full validate_instance output
};

// Parses a roster file into an Instance. V is always rebuilt from the wish
// columns; W is taken verbatim from T columns when present, otherwise built
// from registration times. Missing both is an error ("no priority source").
// Registration ties are resolved by ascending student id and recorded as
// notes. Throws IngestError on schema or value problems.
LoadedInstance load_dataset(const std::filesystem::path& path,
                            const DatasetSchema& schema = {});

// Writes an instance back to the roster schema (ID, [Name], Gender,
// wish1..h, [Time as dense rank], T1..Tm). An optional comment line is
// placed above the header. Reloading yields the same wishes, W, categories,
// and registration order.
void save_instance(const Instance& instance, const std::filesystem::path& path,
                   const std::string& header_comment = "");

std::string instance_csv(const Instance& instance, const std::string& header_comment = "");

}  // namespace mfc
