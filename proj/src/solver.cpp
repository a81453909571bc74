#include "solver.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "bounds.hpp"

namespace htp {

const char* search_status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Unsolvable: return "unsolvable";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  const Shape& shape;
  const int magic;
  const int n;
  const SolverConfig& config;

  std::vector<int> value_at;    // 0 = unassigned
  std::vector<char> used;       // by value
  std::vector<int> hex_sum;     // partial sums
  std::vector<int> hex_open;    // unassigned vertex counts
  int unassigned = 0;
  std::vector<int> trail;       // assignment log, unwound to a mark on backtrack
  std::vector<std::vector<int>> order_buffers;  // per-depth candidate storage

  // Prefix sums over the pool of unused values, rebuilt lazily:
  // low[k] / high[k] = sum of the k smallest / largest unused values.
  std::vector<long long> low;
  std::vector<long long> high;
  bool pool_dirty = true;

  // Unassigned vertices by membership class, for the global counting bound.
  int open_by_membership[4] = {0, 0, 0, 0};

  std::mt19937_64 rng;
  SearchStats stats;
  std::optional<LimitReason> limit;
  Clock::time_point start;
  std::optional<Clock::time_point> deadline;

  bool counting = false;
  unsigned long long solutions = 0;
  std::optional<unsigned long long> cap;
  std::optional<std::vector<int>> witness;

  Search(const Shape& s, int m, const SolverConfig& c)
      : shape(s), magic(m), n(s.vertex_count()), config(c), rng(c.seed) {
    value_at.assign(n, 0);
    used.assign(n + 1, 0);
    hex_sum.assign(shape.hexagon_count(), 0);
    hex_open.assign(shape.hexagon_count(), 6);
    unassigned = n;
    for (int v = 0; v < n; ++v) ++open_by_membership[shape.membership[v]];
    trail.reserve(n);
    order_buffers.assign(n + 1, {});
    low.reserve(n + 1);
    high.reserve(n + 1);
    start = Clock::now();
    if (config.time_budget)
      deadline = start + std::chrono::duration_cast<Clock::duration>(*config.time_budget);
  }

  void rebuild_pool() {
    low.assign(1, 0);
    high.assign(1, 0);
    for (int v = 1; v <= n; ++v)
      if (!used[v]) low.push_back(low.back() + v);
    for (int v = n; v >= 1; --v)
      if (!used[v]) high.push_back(high.back() + v);
    pool_dirty = false;
  }

  size_t mark() const { return trail.size(); }

  bool out_of_time() {
    if (!deadline) return false;
    if ((stats.nodes_expanded & 0x3ff) != 0) return false;
    return Clock::now() >= *deadline;
  }

  void assign(int vertex, int value) {
    value_at[vertex] = value;
    used[value] = 1;
    --unassigned;
    --open_by_membership[shape.membership[vertex]];
    pool_dirty = true;
    for (int h : shape.hexagons_of_vertex[vertex]) {
      hex_sum[h] += value;
      --hex_open[h];
    }
    trail.push_back(vertex);
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      const int vertex = trail.back();
      trail.pop_back();
      const int value = value_at[vertex];
      value_at[vertex] = 0;
      used[value] = 0;
      ++unassigned;
      ++open_by_membership[shape.membership[vertex]];
      for (int h : shape.hexagons_of_vertex[vertex]) {
        hex_sum[h] -= value;
        ++hex_open[h];
      }
    }
    pool_dirty = true;
  }

  // Assign, run forced assignments to a fixpoint, then check the interval
  // bound on every open hexagon. False means the branch is contradicted.
  bool assign_and_propagate(int vertex, int value) {
    assign(vertex, value);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int h = 0; h < shape.hexagon_count(); ++h) {
        if (hex_open[h] == 0) {
          if (hex_sum[h] != magic) {
            ++stats.prunes;
            return false;
          }
          continue;
        }
        if (hex_open[h] != 1) continue;
        int target = -1;
        for (int v : shape.hexagons[h])
          if (value_at[v] == 0) {
            target = v;
            break;
          }
        const int forced = magic - hex_sum[h];
        if (forced < 1 || forced > n || used[forced]) {
          ++stats.prunes;
          return false;
        }
        assign(target, forced);
        ++stats.forced_assignments;
        progress = true;
      }
    }
    if (pool_dirty) rebuild_pool();
    long long open_demand = 0;  // sum over hexagons of (magic - partial sum)
    for (int h = 0; h < shape.hexagon_count(); ++h) {
      const int k = hex_open[h];
      open_demand += magic - hex_sum[h];
      if (k == 0) {
        if (hex_sum[h] != magic) {
          ++stats.prunes;
          return false;
        }
        continue;
      }
      if (hex_sum[h] + low[k] > magic || hex_sum[h] + high[k] < magic) {
        ++stats.prunes;
        return false;
      }
    }
    // Counting bounds: over any hexagon subset Q, the open demand
    // sum_{h in Q} (M - s_h) equals the Q-membership-weighted sum of the
    // values still to be placed, so it must fit between the two adversarial
    // pairings of unused values with those weights. Checked for the full
    // set and for every leave-one-out subset; rule (c) above is the same
    // bound for singletons.
    if (!counting_bound_ok(open_demand, open_by_membership[3], open_by_membership[2],
                           open_by_membership[1])) {
      ++stats.prunes;
      return false;
    }
    for (int h = 0; h < shape.hexagon_count(); ++h) {
      int c[4] = {0, open_by_membership[1], open_by_membership[2], open_by_membership[3]};
      for (int v : shape.hexagons[h]) {
        if (value_at[v] != 0) continue;
        const int m = shape.membership[v];
        --c[m];
        ++c[m - 1];
      }
      if (!counting_bound_ok(open_demand - (magic - hex_sum[h]), c[3], c[2], c[1])) {
        ++stats.prunes;
        return false;
      }
    }
    return true;
  }

  bool counting_bound_ok(long long demand, int c3, int c2, int c1) const {
    const long long weighted_min =
        3 * low[c3] + 2 * (low[c3 + c2] - low[c3]) + (low[c3 + c2 + c1] - low[c3 + c2]);
    const long long weighted_max =
        3 * high[c3] + 2 * (high[c3 + c2] - high[c3]) + (high[c3 + c2 + c1] - high[c3 + c2]);
    return demand >= weighted_min && demand <= weighted_max;
  }

  // Unassigned vertex of a minimum-open hexagon; ties fall to the higher
  // membership count, then the lower canonical index.
  int choose_vertex() const {
    int min_open = 7;
    for (int h = 0; h < shape.hexagon_count(); ++h)
      if (hex_open[h] > 0) min_open = std::min(min_open, hex_open[h]);
    int best = -1;
    for (int h = 0; h < shape.hexagon_count(); ++h) {
      if (hex_open[h] != min_open) continue;
      for (int v : shape.hexagons[h]) {
        if (value_at[v] != 0) continue;
        if (best < 0 || shape.membership[v] > shape.membership[best] ||
            (shape.membership[v] == shape.membership[best] && v < best))
          best = v;
      }
    }
    return best;
  }

  const std::vector<int>& candidate_values(int depth) {
    std::vector<int>& values = order_buffers[depth];
    values.clear();
    switch (config.value_order) {
      case ValueOrder::Ascending:
        for (int v = 1; v <= n; ++v)
          if (!used[v]) values.push_back(v);
        break;
      case ValueOrder::Descending:
        for (int v = n; v >= 1; --v)
          if (!used[v]) values.push_back(v);
        break;
      case ValueOrder::SeededShuffle:
        for (int v = 1; v <= n; ++v)
          if (!used[v]) values.push_back(v);
        // Explicit Fisher-Yates so runs reproduce across standard libraries.
        for (size_t i = values.size(); i > 1; --i)
          std::swap(values[i - 1], values[rng() % i]);
        break;
    }
    return values;
  }

  // Returns true when the search should stop unwinding (a limit fired, or
  // the first solution was found while not counting).
  bool dfs(int depth) {
    if (unassigned == 0) {
      ++solutions;
      if (!witness) witness = value_at;
      if (!counting) return true;
      if (cap && solutions >= *cap) {
        limit = LimitReason::SolutionCap;
        return true;
      }
      return false;
    }
    const int vertex = choose_vertex();
    for (int value : candidate_values(depth)) {
      if (config.node_limit && stats.nodes_expanded >= *config.node_limit) {
        limit = LimitReason::NodeLimit;
        return true;
      }
      ++stats.nodes_expanded;
      if (out_of_time()) {
        limit = LimitReason::TimeBudget;
        return true;
      }
      const size_t checkpoint = mark();
      const bool stop = assign_and_propagate(vertex, value) && dfs(depth + 1);
      undo_to(checkpoint);
      if (stop) return true;
    }
    return false;
  }
};

SearchOutcome outcome_from(Search& search) {
  SearchOutcome outcome;
  search.stats.elapsed = Clock::now() - search.start;
  outcome.stats = search.stats;
  if (search.witness) {
    outcome.status = SearchStatus::Found;
    outcome.assignment = Assignment{search.shape.family, search.shape.order, *search.witness};
  } else if (search.limit) {
    outcome.status = SearchStatus::Inconclusive;
    outcome.reason = search.limit;
  } else {
    outcome.status = SearchStatus::Unsolvable;
  }
  return outcome;
}

bool magic_in_trivial_range(const Shape& shape, int magic) {
  const long long n = shape.vertex_count();
  return magic >= 21 && magic <= 6 * n - 15;
}

}  // namespace

SearchOutcome solve_one(const Shape& shape, int magic, const SolverConfig& config) {
  if (!magic_in_trivial_range(shape, magic)) {
    SearchOutcome outcome;
    outcome.status = SearchStatus::Unsolvable;
    return outcome;
  }
  Search search(shape, magic, config);
  search.dfs(0);
  SearchOutcome outcome = outcome_from(search);
  if (outcome.status == SearchStatus::Found) {
    const VerifyResult check = verify_solution(shape, *outcome.assignment);
    if (!check.ok() || check.magic != magic)
      throw std::logic_error("solver produced an assignment that fails verification");
  }
  return outcome;
}

CountOutcome count_solutions(const Shape& shape, int magic, const SolverConfig& config,
                             std::optional<unsigned long long> cap) {
  CountOutcome outcome;
  if (!magic_in_trivial_range(shape, magic)) {
    outcome.count = 0;
    return outcome;
  }
  Search search(shape, magic, config);
  search.counting = true;
  search.cap = cap;
  search.dfs(0);
  search.stats.elapsed = Clock::now() - search.start;
  outcome.stats = search.stats;
  if (search.limit) {
    outcome.reason = search.limit;
  } else {
    outcome.count = search.solutions;
  }
  return outcome;
}

std::vector<SweepEntry> sweep(const Shape& shape, std::optional<std::pair<int, int>> range,
                              const SolverConfig& config, int jobs) {
  int lo, hi;
  if (range) {
    lo = range->first;
    hi = range->second;
  } else {
    const auto [bounds, report] = bounds_for(shape.family, shape.order);
    lo = bounds.lower;
    hi = bounds.upper;
  }
  if (lo > hi) return {};

  const long long n = shape.vertex_count();
  const long long average = average_magic(n);

  std::vector<SweepEntry> entries;
  for (int m = lo; m <= hi; ++m) entries.push_back(SweepEntry{m});
  auto entry_for = [&entries, lo](int m) -> SweepEntry& { return entries[m - lo]; };

  auto run_wave = [&](const std::vector<int>& targets) {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t i = next.fetch_add(1); i < targets.size(); i = next.fetch_add(1)) {
        const int m = targets[i];
        SearchOutcome outcome = solve_one(shape, m, config);
        SweepEntry& e = entry_for(m);
        e.status = outcome.status;
        e.assignment = std::move(outcome.assignment);
        e.reason = outcome.reason;
        e.stats = outcome.stats;
      }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(targets.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }
  };

  // Lower half first; the upper half then inherits mirrored solutions and
  // only the leftovers are searched.
  std::vector<int> first_wave, second_wave;
  for (int m = lo; m <= hi; ++m)
    if (m <= average) first_wave.push_back(m);
  run_wave(first_wave);

  for (int m : first_wave) {
    SweepEntry& e = entry_for(m);
    if (e.status != SearchStatus::Found) continue;
    const VerifyResult check = verify_solution(shape, *e.assignment);
    if (!check.ok() || check.magic != m)
      throw std::logic_error("sweep produced an assignment that fails verification");
    const int mirror = static_cast<int>(complement_magic(m, n));
    if (mirror <= hi && mirror >= lo && mirror != m) {
      SweepEntry& me = entry_for(mirror);
      if (!me.assignment) {
        me.status = SearchStatus::Found;
        me.via_complement = true;
        me.assignment = complement_solution(*e.assignment);
      }
    }
  }

  for (int m = lo; m <= hi; ++m)
    if (m > average && !entry_for(m).assignment) second_wave.push_back(m);
  run_wave(second_wave);

  for (SweepEntry& e : entries) {
    if (e.status != SearchStatus::Found || e.via_complement) continue;
    const VerifyResult check = verify_solution(shape, *e.assignment);
    if (!check.ok() || check.magic != e.magic)
      throw std::logic_error("sweep produced an assignment that fails verification");
  }
  return entries;
}

}  // namespace htp
