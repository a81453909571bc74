// Backtracking search with constraint propagation over hexagonal-sum
// constraints: find, count, or refute assignments for a target magic
// constant, plus a sweep harness over a bound range.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hexgrid.hpp"

namespace htp {

enum class ValueOrder { Ascending, Descending, SeededShuffle };

struct SolverConfig {
  std::uint64_t seed = 0;  // only consulted by SeededShuffle
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::duration<double>> time_budget;
  ValueOrder value_order = ValueOrder::Ascending;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t forced_assignments = 0;
  std::uint64_t prunes = 0;
  std::chrono::duration<double> elapsed{0};
};

enum class SearchStatus { Found, Unsolvable, Inconclusive };
enum class LimitReason { NodeLimit, TimeBudget, SolutionCap };

const char* search_status_name(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<Assignment> assignment;  // set iff status == Found
  std::optional<LimitReason> reason;     // set iff status == Inconclusive
  SearchStats stats;
};

// First solution at the given magic constant, or proof of absence by
// exhaustion, or Inconclusive when a limit fires first.
//
// Search contract: (a) pick an unassigned vertex of the hexagon with the
// fewest unassigned vertices, ties broken by higher membership count then
// lower canonical index; (b) a hexagon with one unassigned vertex forces it
// to M minus the partial sum, rejected unless that value is fresh and in
// 1..n; (c) every hexagon with k unassigned vertices and partial sum s must
// admit s + (k smallest unused) <= M <= s + (k largest unused); (d) targets
// outside [21, 6n-15] are rejected outright.
SearchOutcome solve_one(const Shape& shape, int magic, const SolverConfig& config = {});

struct CountOutcome {
  std::optional<unsigned long long> count;  // exact iff the search exhausted
  std::optional<LimitReason> reason;
  SearchStats stats;
  bool exhausted() const { return count.has_value(); }
};

// Exact number of assignments (all labelings distinct) achieving magic.
// An optional cap turns runaway counts into an Inconclusive outcome.
CountOutcome count_solutions(const Shape& shape, int magic, const SolverConfig& config = {},
                             std::optional<unsigned long long> cap = std::nullopt);

struct SweepEntry {
  int magic = 0;
  SearchStatus status = SearchStatus::Inconclusive;
  bool via_complement = false;  // registered from the mirror solution, not searched
  std::optional<Assignment> assignment;
  std::optional<LimitReason> reason;
  SearchStats stats;
};

// One solve per magic constant in [range.first, range.second] (defaults to
// bounds_for when absent). Every found solution is re-verified, and its
// complement is registered under 6n+6-M without extra search when that
// target lies in range. Entries come back in ascending magic order
// regardless of jobs.
std::vector<SweepEntry> sweep(const Shape& shape,
                              std::optional<std::pair<int, int>> range = std::nullopt,
                              const SolverConfig& config = {}, int jobs = 1);

}  // namespace htp
