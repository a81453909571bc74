// Acceptance suite: runs every gate criterion end to end, prints one
// pass/fail line each, and exits with the number of failures.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "hexgrid.hpp"
#include "oracle.hpp"
#include "solution_io.hpp"
#include "solver.hpp"

using namespace htp;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

// Solutions produced along the way, shared with the round-trip criterion.
std::vector<Assignment> g_solutions;

bool expect(bool condition, const std::string& what, std::string& detail) {
  if (!condition && detail.empty()) detail = what;
  return condition;
}

bool check_bounds_row(ShapeFamily family, int order, int lower, int upper,
                      std::string& detail) {
  const auto [bounds, report] = bounds_for(family, order);
  std::ostringstream what;
  what << family_name(family) << " " << order << ": got (" << bounds.lower << ","
       << bounds.upper << "), want (" << lower << "," << upper << ")";
  return expect(bounds.lower == lower && bounds.upper == upper, what.str(), detail);
}

bool criterion_bounds_table(std::string& detail) {
  bool ok = true;
  ok &= check_bounds_row(ShapeFamily::Diamond, 1, 21, 21, detail);
  ok &= check_bounds_row(ShapeFamily::Diamond, 2, 40, 62, detail);
  ok &= check_bounds_row(ShapeFamily::Diamond, 3, 77, 109, detail);
  ok &= check_bounds_row(ShapeFamily::Triangular, 2, 34, 50, detail);
  ok &= check_bounds_row(ShapeFamily::Triangular, 3, 57, 81, detail);
  ok &= check_bounds_row(ShapeFamily::Triangular, 4, 83, 121, detail);
  ok &= check_bounds_row(ShapeFamily::Hexagonal, 1, 21, 21, detail);
  ok &= check_bounds_row(ShapeFamily::Hexagonal, 2, 65, 85, detail);
  ok &= check_bounds_row(ShapeFamily::Hexagonal, 3, 140, 190, detail);
  ok &= check_bounds_row(ShapeFamily::Star, 2, 129, 129, detail);
  // The identity-derived triangular uppers must come with erratum warnings.
  const auto [t3b, t3r] = bounds_for(ShapeFamily::Triangular, 3);
  const auto [t4b, t4r] = bounds_for(ShapeFamily::Triangular, 4);
  ok &= expect(!t3r.warnings.empty(), "triangular 3 missing erratum warning", detail);
  ok &= expect(!t4r.warnings.empty(), "triangular 4 missing erratum warning", detail);
  return ok;
}

bool criterion_complement_symmetry(std::string& detail) {
  struct Row {
    ShapeFamily family;
    int order;
  };
  bool ok = true;
  for (const Row row : {Row{ShapeFamily::Diamond, 1}, Row{ShapeFamily::Diamond, 2},
                        Row{ShapeFamily::Diamond, 3}, Row{ShapeFamily::Triangular, 2},
                        Row{ShapeFamily::Triangular, 3}, Row{ShapeFamily::Triangular, 4},
                        Row{ShapeFamily::Hexagonal, 1}, Row{ShapeFamily::Hexagonal, 2},
                        Row{ShapeFamily::Hexagonal, 3}, Row{ShapeFamily::Star, 2}}) {
    const auto [bounds, report] = bounds_for(row.family, row.order);
    const long long n = expected_vertex_count(row.family, row.order);
    std::ostringstream what;
    what << family_name(row.family) << " " << row.order << " breaks complement symmetry";
    ok &= expect(bounds.lower + bounds.upper == 6 * n + 6, what.str(), detail);
    ok &= expect((bounds.lower + bounds.upper) % 2 == 0 &&
                     (bounds.lower + bounds.upper) / 2 == average_magic(n),
                 what.str() + " (midpoint)", detail);
  }
  return ok;
}

bool criterion_diamond3_refutation(std::string& detail) {
  const Diamond3Refutation r = refute_diamond3_extreme(110);
  bool ok = true;
  ok &= expect(r.f_sum == 25, "f_sum != 25", detail);
  ok &= expect(r.f_d_max == 15, "f_d_max != 15", detail);
  ok &= expect(r.t_size == 2 && r.d_size == 14 && r.s_size == 14,
               "group sizes != 2/14/14", detail);
  ok &= expect(r.bound_8m == 868, "bound != 868", detail);
  ok &= expect(r.refuted, "110 not refuted", detail);
  return ok;
}

bool criterion_certificates(std::string& detail) {
  struct Row {
    ShapeFamily family;
    int order;
  };
  bool ok = true;
  for (const Row row : {Row{ShapeFamily::Diamond, 1}, Row{ShapeFamily::Diamond, 2},
                        Row{ShapeFamily::Diamond, 3}, Row{ShapeFamily::Triangular, 2},
                        Row{ShapeFamily::Triangular, 3}, Row{ShapeFamily::Triangular, 4},
                        Row{ShapeFamily::Hexagonal, 1}, Row{ShapeFamily::Hexagonal, 2},
                        Row{ShapeFamily::Hexagonal, 3}, Row{ShapeFamily::Star, 2}}) {
    const Shape shape = build_shape(row.family, row.order);
    const auto [bounds, report] = bounds_for(row.family, row.order);
    for (const CoverCertificate& cert : report.certificates) {
      std::ostringstream what;
      what << family_name(row.family) << " " << row.order << " certificate '" << cert.name
           << "'";
      ok &= expect(check_cover_certificate(shape, cert).valid, what.str() + " invalid",
                   detail);
      for (size_t h = 0; ok && h < cert.hex_mult.size(); ++h) {
        CoverCertificate corrupt = cert;
        corrupt.hex_mult[h] += 1;
        ok &= expect(!check_cover_certificate(shape, corrupt).valid,
                     what.str() + " accepts perturbed hexagon multiplicity", detail);
      }
      for (size_t v = 0; ok && v < cert.vtx_mult.size(); ++v) {
        CoverCertificate corrupt = cert;
        corrupt.vtx_mult[v] += 1;
        ok &= expect(!check_cover_certificate(shape, corrupt).valid,
                     what.str() + " accepts perturbed vertex multiplicity", detail);
      }
    }
  }
  return ok;
}

bool sweep_all_found(const Shape& shape, int lo, int hi, std::string& detail) {
  const auto entries = sweep(shape, std::make_pair(lo, hi));
  bool ok = true;
  for (const SweepEntry& e : entries) {
    std::ostringstream what;
    what << family_name(shape.family) << " " << shape.order << " M=" << e.magic << " is "
         << search_status_name(e.status);
    ok &= expect(e.status == SearchStatus::Found, what.str(), detail);
    if (e.status == SearchStatus::Found) {
      ok &= expect(verify_solution(shape, *e.assignment).magic == e.magic,
                   what.str() + " (verify)", detail);
      g_solutions.push_back(*e.assignment);
    }
  }
  return ok;
}

bool criterion_diamond2_sweep(std::string& detail) {
  const Shape d2 = build_shape(ShapeFamily::Diamond, 2);
  bool ok = sweep_all_found(d2, 40, 62, detail);
  for (int magic : {39, 63}) {
    const SearchOutcome outcome = solve_one(d2, magic);
    std::ostringstream what;
    what << "diamond 2 M=" << magic << " not exhaustively unsolvable";
    ok &= expect(outcome.status == SearchStatus::Unsolvable && !outcome.reason.has_value(),
                 what.str(), detail);
  }
  return ok;
}

bool criterion_oracle_equivalence(std::string& detail) {
  const Shape d1 = build_shape(ShapeFamily::Diamond, 1);
  bool ok = true;
  for (int m = 18; m <= 24; ++m) {
    const auto counted = count_solutions(d1, m);
    const unsigned long long reference = oracle_count(d1, m);
    std::ostringstream what;
    what << "diamond 1 M=" << m << " solver/oracle disagree";
    ok &= expect(counted.exhausted() && *counted.count == reference, what.str(), detail);
    ok &= expect(reference == (m == 21 ? 720ull : 0ull), what.str() + " (expected value)",
                 detail);
  }
  const Shape t2 = build_shape(ShapeFamily::Triangular, 2);
  for (int m : {34, 42, 50}) {
    const auto counted = count_solutions(t2, m);
    const unsigned long long reference = oracle_count(t2, m);
    std::ostringstream what;
    what << "triangular 2 M=" << m << " solver/oracle disagree";
    ok &= expect(counted.exhausted() && *counted.count == reference, what.str(), detail);
  }
  return ok;
}

// The deterministic orders stall on the rigid diamond-3 endpoints, so those
// two targets run seeded-shuffle restarts under a fixed node budget.
SearchOutcome solve_with_restarts(const Shape& shape, int magic, std::string& detail) {
  SolverConfig config;
  config.value_order = ValueOrder::SeededShuffle;
  config.node_limit = 2000000;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    config.seed = seed;
    const SearchOutcome outcome = solve_one(shape, magic, config);
    if (outcome.status != SearchStatus::Inconclusive) return outcome;
  }
  detail = "restarts exhausted at M=" + std::to_string(magic);
  return SearchOutcome{};
}

bool criterion_diamond3_solves(std::string& detail) {
  const Shape d3 = build_shape(ShapeFamily::Diamond, 3);
  bool ok = true;
  for (int magic : {77, 93, 109}) {
    const auto start = Clock::now();
    const SearchOutcome outcome = magic == 93 ? solve_one(d3, magic)
                                              : solve_with_restarts(d3, magic, detail);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream what;
    what << "diamond 3 M=" << magic << " " << search_status_name(outcome.status) << " after "
         << secs << "s";
    ok &= expect(outcome.status == SearchStatus::Found && secs <= 60.0, what.str(), detail);
    if (outcome.status == SearchStatus::Found) {
      ok &= expect(verify_solution(d3, *outcome.assignment).magic == magic,
                   what.str() + " (verify)", detail);
      g_solutions.push_back(*outcome.assignment);
    }
  }
  return ok;
}

bool criterion_hexagonal2_sweep(std::string& detail) {
  return sweep_all_found(build_shape(ShapeFamily::Hexagonal, 2), 65, 85, detail);
}

bool criterion_star(std::string& detail) {
  const Shape star = build_shape(ShapeFamily::Star, 2);
  const SearchOutcome outcome = solve_one(star, 129);
  bool ok = expect(outcome.status == SearchStatus::Found, "star M=129 not found", detail);
  if (outcome.status == SearchStatus::Found) g_solutions.push_back(*outcome.assignment);

  // 128 never reaches the search: the forced-constant bound excludes it.
  const auto start = Clock::now();
  const auto [bounds, report] = bounds_for(ShapeFamily::Star, 2);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  ok &= expect(bounds.lower == 129 && bounds.upper == 129, "star bound is not {129}", detail);
  ok &= expect(128 < bounds.lower, "128 not rejected by the bound", detail);
  ok &= expect(secs < 1.0, "bound rejection was not instant", detail);
  return ok;
}

bool criterion_triangular2_sweep(std::string& detail) {
  return sweep_all_found(build_shape(ShapeFamily::Triangular, 2), 34, 50, detail);
}

bool criterion_hexagonal3(std::string& detail) {
  const Shape h3 = build_shape(ShapeFamily::Hexagonal, 3);
  SolverConfig config;
  config.time_budget = std::chrono::duration<double>(540.0);
  const SearchOutcome outcome = solve_one(h3, 165, config);
  std::ostringstream what;
  what << "hexagonal 3 M=165 " << search_status_name(outcome.status);
  const bool ok = expect(outcome.status == SearchStatus::Found, what.str(), detail);
  if (outcome.status == SearchStatus::Found) {
    g_solutions.push_back(*outcome.assignment);
    std::cout << "    (hexagonal 3: M=165 found, " << outcome.stats.nodes_expanded
              << " nodes; other targets in [140,190] not attempted here)\n";
  }
  return ok;
}

bool criterion_round_trip(std::string& detail) {
  const fs::path dir = fs::temp_directory_path() / "htp-acceptance-roundtrip";
  fs::create_directories(dir);
  bool ok = expect(!g_solutions.empty(), "no solutions collected", detail);
  int index = 0;
  for (const Assignment& assignment : g_solutions) {
    const Shape shape = build_shape(assignment.family, assignment.order);
    const int magic = *verify_solution(shape, assignment).magic;
    const long long n = shape.vertex_count();

    const fs::path path = dir / ("solution-" + std::to_string(index++) + ".sol");
    write_solution_file({assignment.family, assignment.order, magic, assignment.values},
                        path.string());
    const SolutionFile loaded = read_solution_file(path.string());
    const VerifyResult direct =
        verify_solution(shape, {loaded.family, loaded.order, loaded.values});
    std::ostringstream what;
    what << family_name(assignment.family) << " " << assignment.order << " M=" << magic;
    ok &= expect(direct.ok() && *direct.magic == magic && loaded.magic == magic,
                 what.str() + " round trip failed", detail);

    const Assignment mirrored = complement_solution(assignment);
    const fs::path mirror_path = dir / ("solution-" + std::to_string(index++) + ".sol");
    write_solution_file({mirrored.family, mirrored.order,
                         static_cast<int>(complement_magic(magic, n)), mirrored.values},
                        mirror_path.string());
    const SolutionFile mirror_loaded = read_solution_file(mirror_path.string());
    const VerifyResult mirror_check = verify_solution(
        shape, {mirror_loaded.family, mirror_loaded.order, mirror_loaded.values});
    ok &= expect(mirror_check.ok() && *mirror_check.magic == complement_magic(magic, n),
                 what.str() + " complement file failed", detail);
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"bounds table reproduction", criterion_bounds_table},
      {"complement symmetry of all bounds", criterion_complement_symmetry},
      {"diamond-3 endpoint refutation", criterion_diamond3_refutation},
      {"certificate suite with perturbations", criterion_certificates},
      {"diamond-2 full sweep + exhaustive refutations", criterion_diamond2_sweep},
      {"solver/oracle count equivalence", criterion_oracle_equivalence},
      {"diamond-3 solves at 77, 93, 109", criterion_diamond3_solves},
      {"hexagonal-2 full sweep", criterion_hexagonal2_sweep},
      {"star-2 solve + forced-constant rejection", criterion_star},
      {"triangular-2 full sweep", criterion_triangular2_sweep},
      {"hexagonal-3 best-effort at 165", criterion_hexagonal3},
      {"round trip and complement of every solution", criterion_round_trip},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] criterion %2zu: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), secs, detail.empty() ? "" : " - ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
