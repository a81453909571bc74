// Command-line front end. Talks to the engine exclusively through the
// shared library's C API.
//
// Exit codes: 0 found/ok, 1 unsolvable/violations, 2 inconclusive,
// 64 malformed flags or files, 65 unsupported shape.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <htp/htp.h>

namespace {

constexpr int kExitFound = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitUnsupported = 65;

struct ShapeDeleter {
  void operator()(htp_shape* s) const { htp_shape_free(s); }
};
struct SolutionDeleter {
  void operator()(htp_solution* s) const { htp_solution_free(s); }
};
struct SweepDeleter {
  void operator()(htp_sweep_result* s) const { htp_sweep_result_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { htp_string_free(s); }
};

using ShapePtr = std::unique_ptr<htp_shape, ShapeDeleter>;
using SolutionPtr = std::unique_ptr<htp_solution, SolutionDeleter>;
using SweepPtr = std::unique_ptr<htp_sweep_result, SweepDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(htp_status status) {
  switch (status) {
    case HTP_OK: return kExitFound;
    case HTP_ERROR_UNSUPPORTED_SHAPE: return kExitUnsupported;
    case HTP_ERROR_VERIFICATION_FAILED: return kExitUnsolvable;
    default: return kExitUsage;
  }
}

int fail(htp_status status) {
  std::cerr << "error: " << htp_last_error() << "\n";
  return exit_code_for(status);
}

int parse_family(const std::string& name) {
  if (name == "diamond") return HTP_FAMILY_DIAMOND;
  if (name == "triangular") return HTP_FAMILY_TRIANGULAR;
  if (name == "hexagonal") return HTP_FAMILY_HEXAGONAL;
  if (name == "star") return HTP_FAMILY_STAR;
  return -1;
}

// -1 when the family name is unknown; the engine rejects bad orders itself.
ShapePtr make_shape(const std::string& family, int order, int& exit_code) {
  const int code = parse_family(family);
  if (code < 0) {
    std::cerr << "error: unsupported shape family '" << family << "'\n";
    exit_code = kExitUnsupported;
    return nullptr;
  }
  htp_shape* raw = nullptr;
  const htp_status status = htp_shape_create(code, order, &raw);
  if (status != HTP_OK) {
    exit_code = fail(status);
    return nullptr;
  }
  return ShapePtr(raw);
}

std::optional<double> default_timeout_from_env() {
  const char* raw = std::getenv("HTP_DEFAULT_TIMEOUT_SECS");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const double secs = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || secs <= 0) return std::nullopt;
  return secs;
}

struct SolveFlags {
  std::optional<std::uint64_t> seed;
  std::optional<double> timeout_secs;
  std::optional<std::uint64_t> node_limit;
};

htp_solver_options make_options(const SolveFlags& flags) {
  htp_solver_options options;
  htp_solver_options_init(&options);
  if (flags.seed) {
    options.seed = *flags.seed;
    options.value_order = HTP_VALUE_ORDER_SEEDED_SHUFFLE;
  }
  if (flags.node_limit) options.node_limit = *flags.node_limit;
  if (flags.timeout_secs)
    options.time_budget_secs = *flags.timeout_secs;
  else if (auto env = default_timeout_from_env())
    options.time_budget_secs = *env;
  return options;
}

std::string stats_suffix(const htp_search_stats& stats) {
  std::ostringstream os;
  os << "nodes=" << stats.nodes_expanded << " ms=" << static_cast<long long>(stats.elapsed_secs * 1000.0);
  return os.str();
}

int run_shape(const std::string& family, int order, bool json) {
  int exit_code = kExitFound;
  const ShapePtr shape = make_shape(family, order, exit_code);
  if (!shape) return exit_code;
  if (json) {
    char* raw = nullptr;
    const htp_status status = htp_shape_to_json(shape.get(), &raw);
    if (status != HTP_OK) return fail(status);
    const StringPtr text(raw);
    std::cout << text.get() << "\n";
  } else {
    std::cout << "family " << family << "\n";
    std::cout << "order " << order << "\n";
    std::cout << "vertices " << htp_shape_vertex_count(shape.get()) << "\n";
    std::cout << "hexagons " << htp_shape_hexagon_count(shape.get()) << "\n";
  }
  return kExitFound;
}

int run_bounds(const std::string& family, int order) {
  const int code = parse_family(family);
  if (code < 0) {
    std::cerr << "error: unsupported shape family '" << family << "'\n";
    return kExitUnsupported;
  }
  htp_bounds_info info;
  char* raw = nullptr;
  const htp_status status = htp_bounds(code, order, &info, &raw);
  if (status != HTP_OK) return fail(status);
  const StringPtr report(raw);
  std::cout << report.get();
  return kExitFound;
}

SolutionPtr solution_from_values(int family_code, int order, int magic,
                                 const std::vector<int32_t>& values, int& exit_code) {
  htp_solution* raw = nullptr;
  const htp_status status = htp_solution_create(
      family_code, order, magic, values.data(), static_cast<int32_t>(values.size()), &raw);
  if (status != HTP_OK) {
    exit_code = fail(status);
    return nullptr;
  }
  return SolutionPtr(raw);
}

int write_or_print(const SolutionPtr& solution, const std::optional<std::string>& path) {
  if (path) {
    const htp_status status = htp_solution_write_file(solution.get(), path->c_str());
    if (status != HTP_OK) return fail(status);
    return kExitFound;
  }
  char* raw = nullptr;
  const htp_status status = htp_solution_to_string(solution.get(), &raw);
  if (status != HTP_OK) return fail(status);
  const StringPtr text(raw);
  std::cout << text.get();
  return kExitFound;
}

int run_solve(const std::string& family, int order, int magic, const SolveFlags& flags,
              const std::optional<std::string>& out_path) {
  int exit_code = kExitFound;
  const ShapePtr shape = make_shape(family, order, exit_code);
  if (!shape) return exit_code;

  const htp_solver_options options = make_options(flags);
  std::vector<int32_t> values(htp_shape_vertex_count(shape.get()));
  int search_status = 0;
  htp_search_stats stats;
  const htp_status status =
      htp_solve(shape.get(), magic, &options, &search_status, values.data(), &stats);
  if (status != HTP_OK) return fail(status);

  if (search_status == HTP_SEARCH_FOUND) {
    std::cerr << "found magic=" << magic << " " << stats_suffix(stats) << "\n";
    const SolutionPtr solution = solution_from_values(
        htp_shape_family(shape.get()), order, magic, values, exit_code);
    if (!solution) return exit_code;
    return write_or_print(solution, out_path);
  }
  if (search_status == HTP_SEARCH_UNSOLVABLE) {
    std::cerr << "unsolvable magic=" << magic << " " << stats_suffix(stats) << "\n";
    return kExitUnsolvable;
  }
  std::cerr << "inconclusive magic=" << magic << " " << stats_suffix(stats) << "\n";
  return kExitInconclusive;
}

int run_sweep(const std::string& family, int order, std::optional<int> from,
              std::optional<int> to, std::optional<double> timeout, int jobs,
              const std::optional<std::string>& out_dir) {
  int exit_code = kExitFound;
  const ShapePtr shape = make_shape(family, order, exit_code);
  if (!shape) return exit_code;
  if (from.has_value() != to.has_value()) {
    std::cerr << "error: --from and --to must be given together\n";
    return kExitUsage;
  }

  SolveFlags flags;
  flags.timeout_secs = timeout;
  const htp_solver_options options = make_options(flags);

  htp_sweep_result* raw = nullptr;
  const htp_status status =
      htp_sweep(shape.get(), from.value_or(1), to.value_or(0), &options, jobs, &raw);
  if (status != HTP_OK) return fail(status);
  const SweepPtr result(raw);

  if (out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*out_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create directory '" << *out_dir << "'\n";
      return kExitUsage;
    }
  }

  const int32_t size = htp_sweep_result_size(result.get());
  std::vector<int32_t> values(htp_shape_vertex_count(shape.get()));
  for (int32_t i = 0; i < size; ++i) {
    int32_t magic = 0;
    int search_status = 0;
    int via_complement = 0;
    htp_search_stats stats;
    htp_sweep_result_entry(result.get(), i, &magic, &search_status, &via_complement, &stats);
    std::cout << magic << " ";
    if (search_status == HTP_SEARCH_FOUND) {
      std::cout << "found" << (via_complement ? " (complement)" : "");
    } else if (search_status == HTP_SEARCH_UNSOLVABLE) {
      std::cout << "none";
    } else {
      std::cout << "timeout";
    }
    std::cout << " " << stats_suffix(stats) << "\n";

    if (search_status == HTP_SEARCH_FOUND && out_dir) {
      if (htp_sweep_result_values(result.get(), i, values.data()) != HTP_OK) continue;
      const SolutionPtr solution = solution_from_values(
          htp_shape_family(shape.get()), order, magic, values, exit_code);
      if (!solution) return exit_code;
      std::ostringstream name;
      name << family << "-" << order << "-m" << magic << ".sol";
      const std::string path = (std::filesystem::path(*out_dir) / name.str()).string();
      const htp_status write_status = htp_solution_write_file(solution.get(), path.c_str());
      if (write_status != HTP_OK) return fail(write_status);
    }
  }
  return kExitFound;
}

int run_count(const std::string& family, int order, int magic, bool use_oracle,
              std::optional<double> timeout) {
  int exit_code = kExitFound;
  const ShapePtr shape = make_shape(family, order, exit_code);
  if (!shape) return exit_code;

  if (use_oracle) {
    uint64_t count = 0;
    const htp_status status = htp_oracle_count(shape.get(), magic, &count);
    if (status != HTP_OK) return fail(status);
    std::cout << count << "\n";
    return kExitFound;
  }

  SolveFlags flags;
  flags.timeout_secs = timeout;
  const htp_solver_options options = make_options(flags);
  int exhausted = 0;
  uint64_t count = 0;
  htp_search_stats stats;
  const htp_status status =
      htp_count_solutions(shape.get(), magic, &options, 0, &exhausted, &count, &stats);
  if (status != HTP_OK) return fail(status);
  if (!exhausted) {
    std::cerr << "inconclusive after " << stats_suffix(stats) << "\n";
    return kExitInconclusive;
  }
  std::cout << count << "\n";
  return kExitFound;
}

int run_verify(const std::string& path) {
  htp_solution* raw_solution = nullptr;
  htp_status status = htp_solution_read_file(path.c_str(), &raw_solution);
  if (status != HTP_OK) return fail(status);
  const SolutionPtr solution(raw_solution);

  htp_shape* raw_shape = nullptr;
  status = htp_shape_create(htp_solution_family(solution.get()),
                            htp_solution_order(solution.get()), &raw_shape);
  if (status != HTP_OK) return fail(status);
  const ShapePtr shape(raw_shape);

  std::vector<int32_t> values(htp_solution_value_count(solution.get()));
  htp_solution_values(solution.get(), values.data());

  int32_t magic = 0;
  char* raw_violations = nullptr;
  status = htp_verify(shape.get(), values.data(), static_cast<int32_t>(values.size()), &magic,
                      &raw_violations);
  const StringPtr violations(raw_violations);
  if (status == HTP_ERROR_VERIFICATION_FAILED) {
    if (violations) std::cout << violations.get() << "\n";
    return kExitUnsolvable;
  }
  if (status != HTP_OK) return fail(status);
  if (magic != htp_solution_magic(solution.get())) {
    std::cout << "file declares magic " << htp_solution_magic(solution.get())
              << " but the assignment verifies at " << magic << "\n";
    return kExitUnsolvable;
  }
  std::cout << "OK magic=" << magic << "\n";
  return kExitFound;
}

int run_complement(const std::string& path, const std::optional<std::string>& out_path) {
  htp_solution* raw_solution = nullptr;
  htp_status status = htp_solution_read_file(path.c_str(), &raw_solution);
  if (status != HTP_OK) return fail(status);
  const SolutionPtr solution(raw_solution);

  const int32_t count = htp_solution_value_count(solution.get());
  std::vector<int32_t> values(count);
  htp_solution_values(solution.get(), values.data());
  status = htp_complement_values(values.data(), count, values.data());
  if (status != HTP_OK) return fail(status);

  const int32_t magic = htp_complement_magic(htp_solution_magic(solution.get()), count);
  int exit_code = kExitFound;
  const SolutionPtr mirrored =
      solution_from_values(htp_solution_family(solution.get()),
                           htp_solution_order(solution.get()), magic, values, exit_code);
  if (!mirrored) return exit_code;
  return write_or_print(mirrored, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hexagonal tortoise puzzle engine"};
  app.require_subcommand(1);
  app.set_version_flag("--version", htp_version());

  std::string family;
  int order = 1;
  int magic = 0;
  bool json = false;
  bool use_oracle = false;
  SolveFlags solve_flags;
  std::optional<std::string> out_path;
  std::optional<std::string> out_dir;
  std::optional<int> from, to;
  std::optional<double> timeout_per_m;
  int jobs = 1;
  std::string file_path;

  auto add_shape_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "diamond|triangular|hexagonal|star")->required();
    cmd->add_option("--order", order, "shape order")->required();
  };

  CLI::App* shape_cmd = app.add_subcommand("shape", "vertex/hexagon counts or JSON layout");
  add_shape_flags(shape_cmd);
  shape_cmd->add_flag("--json", json, "emit the canonical JSON layout");

  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "magic-constant range with its derivation");
  add_shape_flags(bounds_cmd);

  CLI::App* solve_cmd = app.add_subcommand("solve", "search for one solution");
  add_shape_flags(solve_cmd);
  solve_cmd->add_option("--magic", magic, "target magic constant")->required();
  solve_cmd->add_option("--seed", solve_flags.seed, "seed (enables shuffled value order)");
  solve_cmd->add_option("--timeout", solve_flags.timeout_secs, "time budget in seconds");
  solve_cmd->add_option("--node-limit", solve_flags.node_limit, "node expansion limit");
  solve_cmd->add_option("--out", out_path, "write the solution file here");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "solve every target in a range");
  add_shape_flags(sweep_cmd);
  sweep_cmd->add_option("--from", from, "range start (default: derived lower bound)");
  sweep_cmd->add_option("--to", to, "range end (default: derived upper bound)");
  sweep_cmd->add_option("--timeout-per-m", timeout_per_m, "per-target seconds");
  sweep_cmd->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out-dir", out_dir, "persist solutions into this directory");

  CLI::App* count_cmd = app.add_subcommand("count", "count all solutions for a target");
  add_shape_flags(count_cmd);
  count_cmd->add_option("--magic", magic, "target magic constant")->required();
  count_cmd->add_flag("--oracle", use_oracle, "use the brute-force oracle");
  count_cmd->add_option("--timeout", timeout_per_m, "time budget in seconds");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution file");
  verify_cmd->add_option("file", file_path, "solution file")->required();

  CLI::App* complement_cmd =
      app.add_subcommand("complement", "map a solution file to its mirror");
  complement_cmd->add_option("file", file_path, "solution file")->required();
  complement_cmd->add_option("--out", out_path, "write the mirrored file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (shape_cmd->parsed()) return run_shape(family, order, json);
  if (bounds_cmd->parsed()) return run_bounds(family, order);
  if (solve_cmd->parsed()) return run_solve(family, order, magic, solve_flags, out_path);
  if (sweep_cmd->parsed()) return run_sweep(family, order, from, to, timeout_per_m, jobs, out_dir);
  if (count_cmd->parsed()) return run_count(family, order, magic, use_oracle, timeout_per_m);
  if (verify_cmd->parsed()) return run_verify(file_path);
  if (complement_cmd->parsed()) return run_complement(file_path, out_path);
  return kExitUsage;
}
