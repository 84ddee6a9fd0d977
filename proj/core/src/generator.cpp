#include "mfc/generator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfc/dataset.hpp"
#include "mfc/errors.hpp"
#include "mfc/rng.hpp"
#include "mfc/welfare.hpp"

namespace mfc {

std::array<double, 2> GeneratorConfig::default_proportions(int students) {
  if (students == 395) return {208.0 / 395.0, 187.0 / 395.0};
  if (students == 649) return {383.0 / 649.0, 266.0 / 649.0};
  return {0.5, 0.5};
}

Instance generate_semisynthetic(std::vector<Student> roster, const GeneratorConfig& config) {
  const int n = static_cast<int>(roster.size());
  const int m = config.topics;
  const int h = config.wishes;
  if (n < 1) throw IngestError("generator needs at least one student");
  if (m < 1) throw IngestError("generator needs at least one topic");
  if (h < 1 || h > m) {
    throw IngestError("wish count must satisfy 1 <= h <= m (h=" + std::to_string(h) +
                      ", m=" + std::to_string(m) + ")");
  }

  Rng rng(config.seed);

  Instance instance;
  instance.students = std::move(roster);
  instance.topic_count = m;
  instance.has_registration_times = false;
  instance.bounds = Bounds{0, n};

  // Wishes: h distinct uniform topics per student, draw order = rank order.
  instance.wishes = WishMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(h));
  for (StudentId id = 1; id <= n; ++id) {
    const std::vector<int> drawn = rng.sample_distinct(m, h);
    for (int p = 1; p <= h; ++p) {
      instance.wishes.at(id, p) = drawn[static_cast<std::size_t>(p) - 1];
    }
  }

  instance.interest = build_interest_matrix(instance.wishes, h, m);

  // Priorities: per topic, a uniformly random strict order over its
  // choosers, stored through the (c - q + 1) / c scheme.
  instance.priority = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  std::vector<StudentId> choosers;
  for (TopicId j = 1; j <= m; ++j) {
    choosers.clear();
    for (StudentId id = 1; id <= n; ++id) {
      if (instance.wishes.wishes(id, j)) choosers.push_back(id);
    }
    rng.shuffle(choosers);
    const auto c = static_cast<double>(choosers.size());
    for (std::size_t q = 1; q <= choosers.size(); ++q) {
      instance.priority.at(choosers[q - 1], j) = (c - static_cast<double>(q) + 1.0) / c;
    }
  }
  return instance;
}

Instance generate_instance(const GeneratorConfig& config) {
  const int n = config.students;
  if (n < 1) throw IngestError("generator needs at least one student");
  if (std::abs(config.proportions[0] + config.proportions[1] - 1.0) > 1e-9 ||
      config.proportions[0] < 0.0 || config.proportions[1] < 0.0) {
    throw IngestError("protected-attribute proportions must be non-negative and sum to 1");
  }

  // Roster: exact category counts from the proportions, positions mixed by
  // the same seeded stream that drives the wishes.
  const int count0 = static_cast<int>(std::llround(config.proportions[0] * n));
  std::vector<int> categories(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < count0 && i < n; ++i) categories[static_cast<std::size_t>(i)] = 0;
  Rng roster_rng(config.seed);
  roster_rng.shuffle(categories);

  std::vector<Student> roster;
  roster.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Student s;
    s.id = i + 1;
    s.category = categories[static_cast<std::size_t>(i)];
    s.registration = i + 1;  // no real registration data; id order breaks ties
    roster.push_back(std::move(s));
  }

  GeneratorConfig body = config;
  body.seed = config.seed + 0x9e3779b97f4a7c15ull;  // distinct stream for wishes/priorities
  Instance instance = generate_semisynthetic(std::move(roster), body);
  instance.category_labels = {"F", "M"};
  return instance;
}

Instance generate_to_file(const GeneratorConfig& config, const std::filesystem::path& path) {
  Instance instance = generate_instance(config);
  const std::string comment =
      "generator=mt19937-64 seed=" + std::to_string(config.seed) +
      " n=" + std::to_string(config.students) + " m=" + std::to_string(config.topics) +
      " h=" + std::to_string(config.wishes);
  save_instance(instance, path, comment);
  return instance;
}

}  // namespace mfc
