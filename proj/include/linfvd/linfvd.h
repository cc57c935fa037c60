/* SPDX-License-Identifier: Apache-2.0 */
#ifndef LINFVD_H
#define LINFVD_H

/* C interface to the exact L-infinity Voronoi engine.
 *
 * Objects are opaque handles released with their *_free function. Every
 * call that can fail returns a linfvd_status; on failure the message is
 * available from linfvd_last_error() on the same thread. Strings handed
 * out by the library are released with linfvd_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define LINFVD_API __declspec(dllexport)
#else
#  define LINFVD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum linfvd_status {
  LINFVD_OK = 0,
  LINFVD_INVALID_ARGUMENT = 1,
  LINFVD_MALFORMED_DOCUMENT = 2,
  LINFVD_DIMENSION_MISMATCH = 3,
  LINFVD_NOT_AXIS_ALIGNED = 4,
  LINFVD_NOT_CLOSED = 5,
  LINFVD_NON_MANIFOLD_VERTEX = 6,
  LINFVD_SELF_INTERSECTING = 7,
  LINFVD_HOLE_OUTSIDE_OUTER = 8,
  LINFVD_DEGENERATE = 9,
  LINFVD_INFEASIBLE_SPEC = 10,
  LINFVD_INTERNAL = 11,
  LINFVD_IO = 12
} linfvd_status;

typedef enum linfvd_bvh_mode {
  LINFVD_BVH_AUTO = 0,
  LINFVD_BVH_ON = 1,
  LINFVD_BVH_OFF = 2
} linfvd_bvh_mode;

typedef struct linfvd_shape linfvd_shape;
typedef struct linfvd_result linfvd_result;

typedef struct linfvd_options {
  int max_depth;          /* 1..64, default 32 */
  linfvd_bvh_mode bvh;    /* default LINFVD_BVH_AUTO */
  int contract;           /* nonzero: drop degree-2 bisector chains */
  int grid_check;         /* oracle grid resolution, 0 disables */
} linfvd_options;

LINFVD_API const char* linfvd_version(void);
LINFVD_API const char* linfvd_status_name(linfvd_status status);
/* Nonzero if the status reports a rejected input shape. */
LINFVD_API int linfvd_status_is_validation(linfvd_status status);
LINFVD_API const char* linfvd_last_error(void);
LINFVD_API void linfvd_string_free(char* s);

LINFVD_API void linfvd_options_init(linfvd_options* options);

/* expected_dim 0 accepts either dimension. */
LINFVD_API linfvd_status linfvd_shape_from_json(const char* json, int expected_dim,
                                                linfvd_shape** out);
LINFVD_API linfvd_status linfvd_shape_from_file(const char* path, int expected_dim,
                                                linfvd_shape** out);
LINFVD_API linfvd_status linfvd_generate(uint64_t seed, int dim, int sites, int holes, int grid,
                                         linfvd_shape** out);
LINFVD_API linfvd_status linfvd_shape_to_json(const linfvd_shape* shape, char** out);
LINFVD_API int linfvd_shape_dimension(const linfvd_shape* shape);
LINFVD_API size_t linfvd_shape_site_count(const linfvd_shape* shape);
LINFVD_API size_t linfvd_shape_reflex_count(const linfvd_shape* shape);
LINFVD_API int linfvd_shape_hole_count(const linfvd_shape* shape);
LINFVD_API void linfvd_shape_free(linfvd_shape* shape);

/* options may be NULL for defaults. */
LINFVD_API linfvd_status linfvd_compute(const linfvd_shape* shape, const linfvd_options* options,
                                        linfvd_result** out);
LINFVD_API size_t linfvd_result_node_count(const linfvd_result* result);
LINFVD_API size_t linfvd_result_edge_count(const linfvd_result* result);
LINFVD_API size_t linfvd_result_cell_count(const linfvd_result* result);
/* Violations found by the grid check, 0 if it was not run. */
LINFVD_API size_t linfvd_result_grid_violations(const linfvd_result* result);
LINFVD_API double linfvd_result_seconds(const linfvd_result* result);
LINFVD_API linfvd_status linfvd_result_graph_json(const linfvd_result* result, char** out);
LINFVD_API linfvd_status linfvd_result_stats_json(const linfvd_result* result, char** out);
LINFVD_API linfvd_status linfvd_result_summary(const linfvd_result* result, char** out);
/* SVG needs a 2D result, OBJ accepts both. */
LINFVD_API linfvd_status linfvd_result_svg(const linfvd_result* result, char** out);
LINFVD_API linfvd_status linfvd_result_obj(const linfvd_result* result, char** out);
LINFVD_API void linfvd_result_free(linfvd_result* result);

#ifdef __cplusplus
}
#endif

#endif /* LINFVD_H */
