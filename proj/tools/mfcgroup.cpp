// Command-line frontend: solve | sweep | validate | generate.
//
// Exit codes: 0 success, 2 infeasible bounds, 3 ingestion/config error,
// 4 internal guard tripped.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfc/dataset.hpp"
#include "mfc/emit.hpp"
#include "mfc/errors.hpp"
#include "mfc/generator.hpp"
#include "mfc/method.hpp"
#include "mfc/metrics.hpp"
#include "mfc/sweep.hpp"
#include "mfc/validation.hpp"

namespace {

struct InputFlags {
  std::string input_path;
  std::string generate_spec;  // "n,m,h,seed"
};

struct CommonFlags {
  double alpha = 1.0;
  double beta = 1.0;
  bool balance_tiebreak = true;
  std::string mod_basis = "unassigned";
  std::string topic_order = "index";
  std::uint64_t max_states = 10'000'000;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
  auto* input = cmd->add_option("--input", flags.input_path, "Roster CSV file");
  auto* generate = cmd->add_option("--generate", flags.generate_spec,
                                   "Generate an instance: n,m,h,seed");
  input->excludes(generate);
  generate->excludes(input);
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--alpha", flags.alpha, "Interest weight (default 1)");
  cmd->add_option("--beta", flags.beta, "Priority weight (default 1)");
  cmd->add_option("--balance-tiebreak", flags.balance_tiebreak,
                  "Prefer balance-improving choices on ties (default true)");
  cmd->add_option("--mod-basis", flags.mod_basis,
                  "Knapsack budget rule basis: unassigned|global")
      ->check(CLI::IsMember({"unassigned", "global"}));
  cmd->add_option("--topic-order", flags.topic_order,
                  "Knapsack topic iteration order: index|demand")
      ->check(CLI::IsMember({"index", "demand"}));
  cmd->add_option("--max-states", flags.max_states,
                  "Oracle state budget (default 1e7)");
}

mfc::GeneratorConfig parse_generate_spec(const std::string& spec) {
  std::vector<long long> parts;
  std::size_t begin = 0;
  while (begin <= spec.size()) {
    const std::size_t comma = spec.find(',', begin);
    const std::string piece =
        spec.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    try {
      parts.push_back(std::stoll(piece));
    } catch (const std::exception&) {
      throw mfc::IngestError("bad --generate value '" + spec + "' (expected n,m,h,seed)");
    }
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (parts.size() != 4) {
    throw mfc::IngestError("bad --generate value '" + spec + "' (expected n,m,h,seed)");
  }
  mfc::GeneratorConfig config;
  config.students = static_cast<int>(parts[0]);
  config.topics = static_cast<int>(parts[1]);
  config.wishes = static_cast<int>(parts[2]);
  config.seed = static_cast<std::uint64_t>(parts[3]);
  config.proportions = mfc::GeneratorConfig::default_proportions(config.students);
  return config;
}

mfc::Instance acquire_instance(const InputFlags& flags, bool require_clean) {
  if (!flags.input_path.empty()) {
    mfc::LoadedInstance loaded = mfc::load_dataset(flags.input_path);
    if (require_clean && !loaded.report.pass()) {
      std::string message = "dataset fails validation:";
      for (const std::string& v : loaded.report.violations) message += "\n  " + v;
      throw mfc::IngestError(message);
    }
    return std::move(loaded.instance);
  }
  if (!flags.generate_spec.empty()) {
    return mfc::generate_instance(parse_generate_spec(flags.generate_spec));
  }
  throw mfc::IngestError("either --input or --generate is required");
}

mfc::SolveOptions make_options(const CommonFlags& flags) {
  mfc::SolveOptions options;
  options.balance_tiebreak = flags.balance_tiebreak;
  options.mod_basis = flags.mod_basis == "global" ? mfc::ModBasis::Global
                                                  : mfc::ModBasis::Unassigned;
  options.topic_order = flags.topic_order == "demand" ? mfc::TopicOrder::Demand
                                                      : mfc::TopicOrder::Index;
  options.oracle_max_states = flags.max_states;
  return options;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mfc::IngestError("cannot write file: " + path);
  out << text;
  if (!out) throw mfc::IngestError("write failed: " + path);
}

std::array<int, 2> category_counts(const mfc::Instance& instance) {
  std::array<int, 2> counts{0, 0};
  for (const mfc::Student& s : instance.students) {
    counts[static_cast<std::size_t>(s.category)]++;
  }
  return counts;
}

int run(int argc, char** argv) {
  CLI::App app{"Capacity-bounded, fairness-aware student-topic grouping"};
  app.require_subcommand(1);

  // --- solve
  auto* solve = app.add_subcommand("solve", "Solve one instance with one method");
  InputFlags solve_input;
  CommonFlags solve_common;
  int solve_cl = 0, solve_cu = 0;
  std::string solve_method = "heuristic";
  std::string solve_out, solve_format = "json";
  add_input_flags(solve, solve_input);
  add_common_flags(solve, solve_common);
  solve->add_option("--cl", solve_cl, "Lower group-size bound C^l")->required();
  solve->add_option("--cu", solve_cu, "Upper group-size bound C^u")->required();
  solve->add_option("--method", solve_method, "heuristic|knapsack|oracle")
      ->check(CLI::IsMember({"heuristic", "knapsack", "oracle"}));
  solve->add_option("--out", solve_out, "Output file for the grouping document");
  solve->add_option("--format", solve_format, "Output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // --- sweep
  auto* sweep = app.add_subcommand("sweep", "Sweep C^l over a range for several methods");
  InputFlags sweep_input;
  CommonFlags sweep_common;
  std::string sweep_range = "2:8";
  int sweep_cu_offset = 1;
  std::string sweep_methods = "heuristic,knapsack";
  std::string sweep_out, sweep_format = "csv";
  add_input_flags(sweep, sweep_input);
  add_common_flags(sweep, sweep_common);
  sweep->add_option("--cl-range", sweep_range, "Inclusive C^l range, e.g. 2:8");
  sweep->add_option("--cu-offset", sweep_cu_offset, "C^u = C^l + offset (default 1)");
  sweep->add_option("--methods", sweep_methods, "Comma-separated method list");
  sweep->add_option("--out", sweep_out, "Output file for the sweep table");
  sweep->add_option("--format", sweep_format, "Output format: csv|json")
      ->check(CLI::IsMember({"json", "csv"}));

  // --- validate
  auto* validate = app.add_subcommand("validate", "Validate a roster file");
  std::string validate_path;
  validate->add_option("--input", validate_path, "Roster CSV file")->required();

  // --- generate
  auto* generate = app.add_subcommand("generate", "Generate a semi-synthetic roster");
  generate->set_help_flag("--help", "Print help");  // frees --h for the wish count
  int gen_n = 0, gen_m = 0, gen_h = 3;
  std::uint64_t gen_seed = 0;
  std::string gen_proportions, gen_out;
  generate->add_option("--n", gen_n, "Number of students")->required();
  generate->add_option("--m", gen_m, "Number of topics")->required();
  generate->add_option("--h", gen_h, "Wishes per student (default 3)");
  generate->add_option("--seed", gen_seed, "Generator seed")->required();
  generate->add_option("--proportions", gen_proportions,
                       "Category proportions p0,p1 (default by roster size)");
  generate->add_option("--out", gen_out, "Output roster CSV")->required();

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    mfc::Instance instance = acquire_instance(solve_input, true);
    instance.bounds = mfc::Bounds{solve_cl, solve_cu};
    instance.alpha = solve_common.alpha;
    instance.beta = solve_common.beta;
    const mfc::Method method = mfc::parse_method(solve_method);
    const mfc::SolveResult result = mfc::run_method(instance, method, make_options(solve_common));
    std::cout << mfc::metrics_json(solve_method, instance.bounds, result.metrics) << "\n";
    if (!solve_out.empty()) {
      const mfc::EmitFormat format =
          solve_format == "csv" ? mfc::EmitFormat::Csv : mfc::EmitFormat::Json;
      mfc::emit_grouping(result.grouping, result.metrics, instance, solve_method,
                         solve_out, format);
    }
    return mfc::kExitOk;
  }

  if (sweep->parsed()) {
    mfc::Instance instance = acquire_instance(sweep_input, true);
    mfc::SweepConfig config;
    const std::size_t colon = sweep_range.find(':');
    try {
      if (colon == std::string::npos) {
        config.cl_from = config.cl_to = std::stoi(sweep_range);
      } else {
        config.cl_from = std::stoi(sweep_range.substr(0, colon));
        config.cl_to = std::stoi(sweep_range.substr(colon + 1));
      }
    } catch (const std::exception&) {
      throw mfc::IngestError("bad --cl-range '" + sweep_range + "' (expected a:b)");
    }
    config.cu_offset = sweep_cu_offset;
    config.alpha = sweep_common.alpha;
    config.beta = sweep_common.beta;
    config.options = make_options(sweep_common);
    std::size_t begin = 0;
    while (begin <= sweep_methods.size()) {
      const std::size_t comma = sweep_methods.find(',', begin);
      const std::string piece = sweep_methods.substr(
          begin, comma == std::string::npos ? std::string::npos : comma - begin);
      if (!piece.empty()) config.methods.push_back(mfc::parse_method(piece));
      if (comma == std::string::npos) break;
      begin = comma + 1;
    }

    const mfc::SweepResult result = mfc::run_sweep(instance, config);
    const std::string text =
        sweep_format == "json" ? mfc::sweep_json(result) + "\n" : mfc::sweep_csv(result);
    if (sweep_out.empty()) {
      std::cout << text;
    } else {
      write_text(sweep_out, text);
      std::cout << "wrote " << result.rows.size() << " rows to " << sweep_out << "\n";
    }
    return mfc::kExitOk;
  }

  if (validate->parsed()) {
    const mfc::LoadedInstance loaded = mfc::load_dataset(validate_path);
    const mfc::Instance& instance = loaded.instance;
    const auto counts = category_counts(instance);
    std::cout << "students: " << instance.size() << "\n"
              << "topics: " << instance.topic_count << "\n"
              << "wishes per student: " << instance.wish_count() << "\n"
              << "categories: " << instance.category_labels[0] << ": " << counts[0] << ", "
              << instance.category_labels[1] << ": " << counts[1] << "\n"
              << "dataset balance: "
              << mfc::balance_from_counts(counts[0], counts[1]) << "\n";
    for (const std::string& note : loaded.report.notes) {
      std::cout << "note: " << note << "\n";
    }
    if (!loaded.report.pass()) {
      for (const std::string& violation : loaded.report.violations) {
        std::cout << "violation: " << violation << "\n";
      }
      std::cout << "result: FAIL\n";
      return mfc::kExitIngest;
    }
    std::cout << "result: PASS\n";
    return mfc::kExitOk;
  }

  if (generate->parsed()) {
    mfc::GeneratorConfig config;
    config.students = gen_n;
    config.topics = gen_m;
    config.wishes = gen_h;
    config.seed = gen_seed;
    config.proportions = mfc::GeneratorConfig::default_proportions(gen_n);
    if (!gen_proportions.empty()) {
      const std::size_t comma = gen_proportions.find(',');
      try {
        config.proportions[0] = std::stod(gen_proportions.substr(0, comma));
        config.proportions[1] = std::stod(gen_proportions.substr(comma + 1));
      } catch (const std::exception&) {
        throw mfc::IngestError("bad --proportions '" + gen_proportions + "' (expected p0,p1)");
      }
    }
    const mfc::Instance instance = mfc::generate_to_file(config, gen_out);
    const auto counts = category_counts(instance);
    std::cout << "wrote " << instance.size() << " students, " << instance.topic_count
              << " topics (seed " << gen_seed << ") to " << gen_out << "\n"
              << "categories: " << instance.category_labels[0] << ": " << counts[0] << ", "
              << instance.category_labels[1] << ": " << counts[1] << "\n";
    return mfc::kExitOk;
  }

  return mfc::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mfc::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return mfc::kExitInfeasible;
  } catch (const mfc::IngestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mfc::kExitIngest;
  } catch (const mfc::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return mfc::kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return mfc::kExitGuard;
  }
}
