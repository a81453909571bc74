// C bindings over the core: opaque handles, status codes, thread-local
// error text. Exceptions never cross this boundary.
#include "htp/htp.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "hexgrid.hpp"
#include "oracle.hpp"
#include "solution_io.hpp"
#include "solver.hpp"

struct htp_shape {
  htp::Shape shape;
};

struct htp_solution {
  htp::SolutionFile solution;
};

struct htp_sweep_result {
  std::vector<htp::SweepEntry> entries;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
htp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const htp::UnsupportedShapeError& e) {
    set_error(e.what());
    return HTP_ERROR_UNSUPPORTED_SHAPE;
  } catch (const htp::SolutionParseError& e) {
    set_error(e.what());
    return HTP_ERROR_PARSE;
  } catch (const htp::IoError& e) {
    set_error(e.what());
    return HTP_ERROR_IO;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return HTP_ERROR_OUT_OF_RANGE;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return HTP_ERROR_OUT_OF_RANGE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return HTP_ERROR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return HTP_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return HTP_ERROR_INTERNAL;
  }
}

htp::ShapeFamily family_from_int(int family) {
  switch (family) {
    case HTP_FAMILY_DIAMOND: return htp::ShapeFamily::Diamond;
    case HTP_FAMILY_TRIANGULAR: return htp::ShapeFamily::Triangular;
    case HTP_FAMILY_HEXAGONAL: return htp::ShapeFamily::Hexagonal;
    case HTP_FAMILY_STAR: return htp::ShapeFamily::Star;
    default:
      throw std::invalid_argument("unknown shape family code " + std::to_string(family));
  }
}

int family_to_int(htp::ShapeFamily family) {
  switch (family) {
    case htp::ShapeFamily::Diamond: return HTP_FAMILY_DIAMOND;
    case htp::ShapeFamily::Triangular: return HTP_FAMILY_TRIANGULAR;
    case htp::ShapeFamily::Hexagonal: return HTP_FAMILY_HEXAGONAL;
    case htp::ShapeFamily::Star: return HTP_FAMILY_STAR;
  }
  return -1;
}

htp::SolverConfig config_from(const htp_solver_options* options) {
  htp::SolverConfig config;
  if (!options) return config;
  config.seed = options->seed;
  if (options->node_limit > 0) config.node_limit = options->node_limit;
  if (options->time_budget_secs > 0)
    config.time_budget = std::chrono::duration<double>(options->time_budget_secs);
  switch (options->value_order) {
    case HTP_VALUE_ORDER_ASCENDING: config.value_order = htp::ValueOrder::Ascending; break;
    case HTP_VALUE_ORDER_DESCENDING: config.value_order = htp::ValueOrder::Descending; break;
    case HTP_VALUE_ORDER_SEEDED_SHUFFLE:
      config.value_order = htp::ValueOrder::SeededShuffle;
      break;
    default:
      throw std::invalid_argument("unknown value order code " +
                                  std::to_string(options->value_order));
  }
  return config;
}

void stats_to(const htp::SearchStats& in, htp_search_stats* out) {
  if (!out) return;
  out->nodes_expanded = in.nodes_expanded;
  out->forced_assignments = in.forced_assignments;
  out->prunes = in.prunes;
  out->elapsed_secs = in.elapsed.count();
}

int status_to_int(htp::SearchStatus status) {
  switch (status) {
    case htp::SearchStatus::Found: return HTP_SEARCH_FOUND;
    case htp::SearchStatus::Unsolvable: return HTP_SEARCH_UNSOLVABLE;
    case htp::SearchStatus::Inconclusive: return HTP_SEARCH_INCONCLUSIVE;
  }
  return -1;
}

htp_status require(bool condition, const char* message) {
  if (condition) return HTP_OK;
  set_error(message);
  return HTP_ERROR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* htp_version(void) { return "1.0.0"; }

const char* htp_last_error(void) { return g_last_error.c_str(); }

void htp_string_free(char* s) { std::free(s); }

htp_status htp_shape_create(int family, int order, htp_shape** out) {
  if (htp_status s = require(out != nullptr, "out must not be NULL"); s != HTP_OK) return s;
  return guarded([&] {
    auto handle = std::make_unique<htp_shape>();
    handle->shape = htp::build_shape(family_from_int(family), order);
    *out = handle.release();
    return HTP_OK;
  });
}

void htp_shape_free(htp_shape* shape) { delete shape; }

int32_t htp_shape_vertex_count(const htp_shape* shape) {
  return shape ? shape->shape.vertex_count() : 0;
}

int32_t htp_shape_hexagon_count(const htp_shape* shape) {
  return shape ? shape->shape.hexagon_count() : 0;
}

int htp_shape_family(const htp_shape* shape) {
  return shape ? family_to_int(shape->shape.family) : -1;
}

int htp_shape_order(const htp_shape* shape) { return shape ? shape->shape.order : -1; }

htp_status htp_shape_vertex(const htp_shape* shape, int32_t index, int32_t* q, int32_t* r,
                            char* cls) {
  if (htp_status s = require(shape != nullptr, "shape must not be NULL"); s != HTP_OK)
    return s;
  if (index < 0 || index >= shape->shape.vertex_count()) {
    set_error("vertex index out of range");
    return HTP_ERROR_OUT_OF_RANGE;
  }
  const htp::VertexKey& v = shape->shape.vertices[index];
  if (q) *q = v.q;
  if (r) *r = v.r;
  if (cls) *cls = v.cls == htp::CornerClass::N ? 'N' : 'S';
  return HTP_OK;
}

htp_status htp_shape_hexagon(const htp_shape* shape, int32_t index, int32_t corners[6]) {
  if (htp_status s = require(shape != nullptr && corners != nullptr,
                             "shape and corners must not be NULL");
      s != HTP_OK)
    return s;
  if (index < 0 || index >= shape->shape.hexagon_count()) {
    set_error("hexagon index out of range");
    return HTP_ERROR_OUT_OF_RANGE;
  }
  for (int i = 0; i < 6; ++i) corners[i] = shape->shape.hexagons[index][i];
  return HTP_OK;
}

htp_status htp_shape_membership(const htp_shape* shape, int32_t vertex_index, int32_t* count) {
  if (htp_status s = require(shape != nullptr && count != nullptr,
                             "shape and count must not be NULL");
      s != HTP_OK)
    return s;
  if (vertex_index < 0 || vertex_index >= shape->shape.vertex_count()) {
    set_error("vertex index out of range");
    return HTP_ERROR_OUT_OF_RANGE;
  }
  *count = shape->shape.membership[vertex_index];
  return HTP_OK;
}

htp_status htp_shape_to_json(const htp_shape* shape, char** json_out) {
  if (htp_status s = require(shape != nullptr && json_out != nullptr,
                             "shape and json_out must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    *json_out = dup_string(htp::shape_to_json(shape->shape));
    return *json_out ? HTP_OK : HTP_ERROR_INTERNAL;
  });
}

htp_status htp_expected_vertex_count(int family, int order, int32_t* out) {
  if (htp_status s = require(out != nullptr, "out must not be NULL"); s != HTP_OK) return s;
  return guarded([&] {
    *out = static_cast<int32_t>(htp::expected_vertex_count(family_from_int(family), order));
    return HTP_OK;
  });
}

int32_t htp_average_magic(int32_t vertex_count) {
  return static_cast<int32_t>(3 * static_cast<int64_t>(vertex_count) + 3);
}

int32_t htp_complement_magic(int32_t magic, int32_t vertex_count) {
  return static_cast<int32_t>(htp::complement_magic(magic, vertex_count));
}

htp_status htp_bounds(int family, int order, htp_bounds_info* info, char** report_out) {
  if (htp_status s = require(info != nullptr, "info must not be NULL"); s != HTP_OK) return s;
  return guarded([&] {
    const auto [bounds, report] = htp::bounds_for(family_from_int(family), order);
    info->lower = bounds.lower;
    info->upper = bounds.upper;
    switch (bounds.kind) {
      case htp::BoundKind::ExactFormula: info->kind = HTP_BOUND_EXACT_FORMULA; break;
      case htp::BoundKind::Literature: info->kind = HTP_BOUND_LITERATURE; break;
      case htp::BoundKind::Trivial: info->kind = HTP_BOUND_TRIVIAL; break;
    }
    if (report_out) {
      *report_out = dup_string(htp::format_bounds_report(bounds, report));
      if (!*report_out) return HTP_ERROR_INTERNAL;
    }
    return HTP_OK;
  });
}

htp_status htp_refute_diamond3_extreme(int32_t magic, htp_diamond3_refutation* out) {
  if (htp_status s = require(out != nullptr, "out must not be NULL"); s != HTP_OK) return s;
  return guarded([&] {
    const htp::Diamond3Refutation r = htp::refute_diamond3_extreme(magic);
    out->requested_magic = r.requested_magic;
    out->refuted_magic = r.refuted_magic;
    out->f_sum = r.f_sum;
    out->f_d_max = r.f_d_max;
    out->t_max = r.t_max;
    out->td_max = r.td_max;
    out->bound_8m = r.bound_8m;
    out->t_size = r.t_size;
    out->d_size = r.d_size;
    out->s_size = r.s_size;
    out->refuted = r.refuted ? 1 : 0;
    return HTP_OK;
  });
}

htp_status htp_verify(const htp_shape* shape, const int32_t* values, int32_t count,
                      int32_t* magic_out, char** violations_out) {
  if (htp_status s = require(shape != nullptr && values != nullptr,
                             "shape and values must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    htp::Assignment assignment{shape->shape.family, shape->shape.order,
                               std::vector<int>(values, values + count)};
    const htp::VerifyResult result = htp::verify_solution(shape->shape, assignment);
    if (result.ok()) {
      if (magic_out) *magic_out = *result.magic;
      return HTP_OK;
    }
    std::string joined;
    for (const std::string& v : result.violations) {
      if (!joined.empty()) joined += "\n";
      joined += v;
    }
    set_error(joined);
    if (violations_out) {
      *violations_out = dup_string(joined);
      if (!*violations_out) return HTP_ERROR_INTERNAL;
    }
    return HTP_ERROR_VERIFICATION_FAILED;
  });
}

htp_status htp_complement_values(const int32_t* values, int32_t count, int32_t* values_out) {
  if (htp_status s = require(values != nullptr && values_out != nullptr,
                             "values and values_out must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    std::vector<int> in(values, values + count);
    if (!htp::is_permutation(in))
      throw std::invalid_argument("values are not a permutation of 1..n");
    for (int32_t i = 0; i < count; ++i) values_out[i] = count + 1 - values[i];
    return HTP_OK;
  });
}

void htp_solver_options_init(htp_solver_options* options) {
  if (!options) return;
  options->seed = 0;
  options->node_limit = 0;
  options->time_budget_secs = 0;
  options->value_order = HTP_VALUE_ORDER_ASCENDING;
}

htp_status htp_solve(const htp_shape* shape, int32_t magic, const htp_solver_options* options,
                     int* search_status, int32_t* values_out, htp_search_stats* stats) {
  if (htp_status s = require(shape != nullptr && search_status != nullptr,
                             "shape and search_status must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    const htp::SearchOutcome outcome =
        htp::solve_one(shape->shape, magic, config_from(options));
    *search_status = status_to_int(outcome.status);
    stats_to(outcome.stats, stats);
    if (outcome.status == htp::SearchStatus::Found && values_out) {
      const auto& values = outcome.assignment->values;
      std::copy(values.begin(), values.end(), values_out);
    }
    return HTP_OK;
  });
}

htp_status htp_count_solutions(const htp_shape* shape, int32_t magic,
                               const htp_solver_options* options, uint64_t cap, int* exhausted,
                               uint64_t* count, htp_search_stats* stats) {
  if (htp_status s = require(shape != nullptr && exhausted != nullptr && count != nullptr,
                             "shape, exhausted and count must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    const htp::CountOutcome outcome = htp::count_solutions(
        shape->shape, magic, config_from(options),
        cap > 0 ? std::optional<unsigned long long>(cap) : std::nullopt);
    stats_to(outcome.stats, stats);
    *exhausted = outcome.exhausted() ? 1 : 0;
    *count = outcome.count.value_or(0);
    return HTP_OK;
  });
}

htp_status htp_oracle_count(const htp_shape* shape, int32_t magic, uint64_t* count) {
  if (htp_status s = require(shape != nullptr && count != nullptr,
                             "shape and count must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    *count = htp::oracle_count(shape->shape, magic);
    return HTP_OK;
  });
}

htp_status htp_oracle_find(const htp_shape* shape, int32_t magic, int* found,
                           int32_t* values_out) {
  if (htp_status s = require(shape != nullptr && found != nullptr,
                             "shape and found must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    const std::optional<htp::Assignment> witness = htp::oracle_find(shape->shape, magic);
    *found = witness ? 1 : 0;
    if (witness && values_out)
      std::copy(witness->values.begin(), witness->values.end(), values_out);
    return HTP_OK;
  });
}

htp_status htp_sweep(const htp_shape* shape, int32_t from, int32_t to,
                     const htp_solver_options* options, int jobs, htp_sweep_result** out) {
  if (htp_status s = require(shape != nullptr && out != nullptr,
                             "shape and out must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    std::optional<std::pair<int, int>> range;
    if (from <= to) range = std::make_pair(from, to);
    auto result = std::make_unique<htp_sweep_result>();
    result->entries = htp::sweep(shape->shape, range, config_from(options), jobs);
    *out = result.release();
    return HTP_OK;
  });
}

void htp_sweep_result_free(htp_sweep_result* result) { delete result; }

int32_t htp_sweep_result_size(const htp_sweep_result* result) {
  return result ? static_cast<int32_t>(result->entries.size()) : 0;
}

htp_status htp_sweep_result_entry(const htp_sweep_result* result, int32_t index,
                                  int32_t* magic, int* search_status, int* via_complement,
                                  htp_search_stats* stats) {
  if (htp_status s = require(result != nullptr, "result must not be NULL"); s != HTP_OK)
    return s;
  if (index < 0 || index >= htp_sweep_result_size(result)) {
    set_error("sweep entry index out of range");
    return HTP_ERROR_OUT_OF_RANGE;
  }
  const htp::SweepEntry& e = result->entries[index];
  if (magic) *magic = e.magic;
  if (search_status) *search_status = status_to_int(e.status);
  if (via_complement) *via_complement = e.via_complement ? 1 : 0;
  stats_to(e.stats, stats);
  return HTP_OK;
}

htp_status htp_sweep_result_values(const htp_sweep_result* result, int32_t index,
                                   int32_t* values_out) {
  if (htp_status s = require(result != nullptr && values_out != nullptr,
                             "result and values_out must not be NULL");
      s != HTP_OK)
    return s;
  if (index < 0 || index >= htp_sweep_result_size(result)) {
    set_error("sweep entry index out of range");
    return HTP_ERROR_OUT_OF_RANGE;
  }
  const htp::SweepEntry& e = result->entries[index];
  if (!e.assignment) {
    set_error("sweep entry has no solution");
    return HTP_ERROR_INVALID_ARGUMENT;
  }
  std::copy(e.assignment->values.begin(), e.assignment->values.end(), values_out);
  return HTP_OK;
}

htp_status htp_solution_create(int family, int order, int32_t magic, const int32_t* values,
                               int32_t count, htp_solution** out) {
  if (htp_status s = require(values != nullptr && out != nullptr,
                             "values and out must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    const htp::ShapeFamily f = family_from_int(family);
    const long long expected = htp::expected_vertex_count(f, order);
    if (expected != count)
      throw std::invalid_argument("value count does not match the declared shape");
    auto handle = std::make_unique<htp_solution>();
    handle->solution = {f, order, magic, std::vector<int>(values, values + count)};
    *out = handle.release();
    return HTP_OK;
  });
}

htp_status htp_solution_parse(const char* text, htp_solution** out) {
  if (htp_status s = require(text != nullptr && out != nullptr,
                             "text and out must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    auto handle = std::make_unique<htp_solution>();
    handle->solution = htp::parse_solution(text);
    *out = handle.release();
    return HTP_OK;
  });
}

htp_status htp_solution_read_file(const char* path, htp_solution** out) {
  if (htp_status s = require(path != nullptr && out != nullptr,
                             "path and out must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    auto handle = std::make_unique<htp_solution>();
    handle->solution = htp::read_solution_file(path);
    *out = handle.release();
    return HTP_OK;
  });
}

htp_status htp_solution_to_string(const htp_solution* solution, char** out) {
  if (htp_status s = require(solution != nullptr && out != nullptr,
                             "solution and out must not be NULL");
      s != HTP_OK)
    return s;
  *out = dup_string(htp::serialize_solution(solution->solution));
  return *out ? HTP_OK : HTP_ERROR_INTERNAL;
}

htp_status htp_solution_write_file(const htp_solution* solution, const char* path) {
  if (htp_status s = require(solution != nullptr && path != nullptr,
                             "solution and path must not be NULL");
      s != HTP_OK)
    return s;
  return guarded([&] {
    htp::write_solution_file(solution->solution, path);
    return HTP_OK;
  });
}

int htp_solution_family(const htp_solution* solution) {
  return solution ? family_to_int(solution->solution.family) : -1;
}

int htp_solution_order(const htp_solution* solution) {
  return solution ? solution->solution.order : -1;
}

int32_t htp_solution_magic(const htp_solution* solution) {
  return solution ? solution->solution.magic : 0;
}

int32_t htp_solution_value_count(const htp_solution* solution) {
  return solution ? static_cast<int32_t>(solution->solution.values.size()) : 0;
}

void htp_solution_free(htp_solution* solution) { delete solution; }

htp_status htp_solution_values(const htp_solution* solution, int32_t* values_out) {
  if (htp_status s = require(solution != nullptr && values_out != nullptr,
                             "solution and values_out must not be NULL");
      s != HTP_OK)
    return s;
  std::copy(solution->solution.values.begin(), solution->solution.values.end(), values_out);
  return HTP_OK;
}

}  // extern "C"
