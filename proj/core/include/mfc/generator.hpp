#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "mfc/types.hpp"

namespace mfc {

struct GeneratorConfig {
  int students = 0;
  int topics = 0;
  int wishes = 3;
  std::uint64_t seed = 0;
  // Fraction of category 0 ("F") and category 1 ("M"); must sum to 1.
  std::array<double, 2> proportions{0.5, 0.5};

  // Roster proportions used for the known semi-synthetic sizes
  // (395 -> 208/187, 649 -> 383/266), 50/50 otherwise.
  static std::array<double, 2> default_proportions(int students);
};

// Semi-synthetic construction on a given roster: each student draws `wishes`
// distinct topics uniformly; each topic's choosers receive a uniformly random
// strict priority order, stored through the (c - q + 1) / c scheme. The
// instance carries no real registration data (ranks default to id order).
Instance generate_semisynthetic(std::vector<Student> roster, const GeneratorConfig& config);

// Synthesizes the roster from config proportions, then generates.
Instance generate_instance(const GeneratorConfig& config);

// Generates and persists the instance; identical seeds produce byte-identical
// files. The generator name and seed are recorded in a comment line above the
// header. Returns the in-memory instance.
Instance generate_to_file(const GeneratorConfig& config, const std::filesystem::path& path);

}  // namespace mfc
