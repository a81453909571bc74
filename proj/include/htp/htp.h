/* htp — engine for the hexagonal tortoise puzzle (jisuguimundo).
 *
 * C API of the shared library: opaque handles, integer status codes, and
 * caller- or callee-owned buffers. Strings returned through a char** are
 * allocated by the library and must be released with htp_string_free.
 * On any non-OK status, htp_last_error() describes the failure for the
 * calling thread.
 */
#ifndef HTP_H
#define HTP_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(HTP_BUILD_SHARED)
#    define HTP_API __declspec(dllexport)
#  else
#    define HTP_API __declspec(dllimport)
#  endif
#else
#  define HTP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum htp_status {
  HTP_OK = 0,
  HTP_ERROR_UNSUPPORTED_SHAPE = 1,
  HTP_ERROR_INVALID_ARGUMENT = 2,
  HTP_ERROR_VERIFICATION_FAILED = 3,
  HTP_ERROR_PARSE = 4,
  HTP_ERROR_IO = 5,
  HTP_ERROR_OUT_OF_RANGE = 6,
  HTP_ERROR_INTERNAL = 7
} htp_status;

typedef enum htp_family {
  HTP_FAMILY_DIAMOND = 0,
  HTP_FAMILY_TRIANGULAR = 1,
  HTP_FAMILY_HEXAGONAL = 2,
  HTP_FAMILY_STAR = 3
} htp_family;

typedef enum htp_bound_kind {
  HTP_BOUND_EXACT_FORMULA = 0,
  HTP_BOUND_LITERATURE = 1,
  HTP_BOUND_TRIVIAL = 2
} htp_bound_kind;

typedef enum htp_search_status {
  HTP_SEARCH_FOUND = 0,
  HTP_SEARCH_UNSOLVABLE = 1,
  HTP_SEARCH_INCONCLUSIVE = 2
} htp_search_status;

typedef enum htp_value_order {
  HTP_VALUE_ORDER_ASCENDING = 0,
  HTP_VALUE_ORDER_DESCENDING = 1,
  HTP_VALUE_ORDER_SEEDED_SHUFFLE = 2
} htp_value_order;

typedef struct htp_shape htp_shape;
typedef struct htp_solution htp_solution;
typedef struct htp_sweep_result htp_sweep_result;

HTP_API const char *htp_version(void);

/* Message for the current thread's most recent failure; never NULL. */
HTP_API const char *htp_last_error(void);

HTP_API void htp_string_free(char *s);

/* ---- shapes ------------------------------------------------------------ */

HTP_API htp_status htp_shape_create(int family, int order, htp_shape **out);
HTP_API void htp_shape_free(htp_shape *shape);
HTP_API int32_t htp_shape_vertex_count(const htp_shape *shape);
HTP_API int32_t htp_shape_hexagon_count(const htp_shape *shape);
HTP_API int htp_shape_family(const htp_shape *shape);
HTP_API int htp_shape_order(const htp_shape *shape);
/* cls receives 'N' or 'S'. */
HTP_API htp_status htp_shape_vertex(const htp_shape *shape, int32_t index, int32_t *q,
                                    int32_t *r, char *cls);
HTP_API htp_status htp_shape_hexagon(const htp_shape *shape, int32_t index,
                                     int32_t corners[6]);
HTP_API htp_status htp_shape_membership(const htp_shape *shape, int32_t vertex_index,
                                        int32_t *count);
HTP_API htp_status htp_shape_to_json(const htp_shape *shape, char **json_out);
HTP_API htp_status htp_expected_vertex_count(int family, int order, int32_t *out);

/* ---- magic-constant arithmetic ------------------------------------------ */

HTP_API int32_t htp_average_magic(int32_t vertex_count);
HTP_API int32_t htp_complement_magic(int32_t magic, int32_t vertex_count);

typedef struct htp_bounds_info {
  int32_t lower;
  int32_t upper;
  int kind; /* htp_bound_kind */
} htp_bounds_info;

/* report_out (optional) receives the full derivation report text. */
HTP_API htp_status htp_bounds(int family, int order, htp_bounds_info *info,
                              char **report_out);

typedef struct htp_diamond3_refutation {
  int32_t requested_magic;
  int32_t refuted_magic;
  int64_t f_sum;
  int64_t f_d_max;
  int64_t t_max;
  int64_t td_max;
  int64_t bound_8m;
  int32_t t_size;
  int32_t d_size;
  int32_t s_size;
  int refuted;
} htp_diamond3_refutation;

HTP_API htp_status htp_refute_diamond3_extreme(int32_t magic, htp_diamond3_refutation *out);

/* ---- verification and the complement transform -------------------------- */

/* HTP_OK: *magic_out holds the common hexagonal sum. On verification
 * failure returns HTP_ERROR_VERIFICATION_FAILED and, when violations_out is
 * non-NULL, a newline-separated list of violations. */
HTP_API htp_status htp_verify(const htp_shape *shape, const int32_t *values, int32_t count,
                              int32_t *magic_out, char **violations_out);

/* Rewrites each value v as n+1-v. values_out may alias values. */
HTP_API htp_status htp_complement_values(const int32_t *values, int32_t count,
                                         int32_t *values_out);

/* ---- solving ------------------------------------------------------------ */

typedef struct htp_solver_options {
  uint64_t seed;             /* used by the seeded-shuffle order */
  uint64_t node_limit;       /* 0 = unlimited */
  double time_budget_secs;   /* <= 0 = unlimited */
  int value_order;           /* htp_value_order */
} htp_solver_options;

HTP_API void htp_solver_options_init(htp_solver_options *options);

typedef struct htp_search_stats {
  uint64_t nodes_expanded;
  uint64_t forced_assignments;
  uint64_t prunes;
  double elapsed_secs;
} htp_search_stats;

/* On HTP_SEARCH_FOUND fills values_out (length vertex_count) when non-NULL. */
HTP_API htp_status htp_solve(const htp_shape *shape, int32_t magic,
                             const htp_solver_options *options, int *search_status,
                             int32_t *values_out, htp_search_stats *stats);

/* *exhausted is 1 when *count is exact; 0 means a limit cut the search. */
HTP_API htp_status htp_count_solutions(const htp_shape *shape, int32_t magic,
                                       const htp_solver_options *options, uint64_t cap,
                                       int *exhausted, uint64_t *count,
                                       htp_search_stats *stats);

HTP_API htp_status htp_oracle_count(const htp_shape *shape, int32_t magic, uint64_t *count);
HTP_API htp_status htp_oracle_find(const htp_shape *shape, int32_t magic, int *found,
                                   int32_t *values_out);

/* from > to requests the shape's derived bound range. jobs > 1 solves
 * independent targets concurrently; entries are ordered by magic. */
HTP_API htp_status htp_sweep(const htp_shape *shape, int32_t from, int32_t to,
                             const htp_solver_options *options, int jobs,
                             htp_sweep_result **out);
HTP_API void htp_sweep_result_free(htp_sweep_result *result);
HTP_API int32_t htp_sweep_result_size(const htp_sweep_result *result);
HTP_API htp_status htp_sweep_result_entry(const htp_sweep_result *result, int32_t index,
                                          int32_t *magic, int *search_status,
                                          int *via_complement, htp_search_stats *stats);
HTP_API htp_status htp_sweep_result_values(const htp_sweep_result *result, int32_t index,
                                           int32_t *values_out);

/* ---- solution files ------------------------------------------------------ */

HTP_API htp_status htp_solution_create(int family, int order, int32_t magic,
                                       const int32_t *values, int32_t count,
                                       htp_solution **out);
HTP_API htp_status htp_solution_parse(const char *text, htp_solution **out);
HTP_API htp_status htp_solution_read_file(const char *path, htp_solution **out);
HTP_API htp_status htp_solution_to_string(const htp_solution *solution, char **out);
HTP_API htp_status htp_solution_write_file(const htp_solution *solution, const char *path);
HTP_API int htp_solution_family(const htp_solution *solution);
HTP_API int htp_solution_order(const htp_solution *solution);
HTP_API int32_t htp_solution_magic(const htp_solution *solution);
HTP_API int32_t htp_solution_value_count(const htp_solution *solution);
HTP_API htp_status htp_solution_values(const htp_solution *solution, int32_t *values_out);
HTP_API void htp_solution_free(htp_solution *solution);

#ifdef __cplusplus
}
#endif

#endif /* HTP_H */
