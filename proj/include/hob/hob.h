#ifndef HOB_HOB_H
#define HOB_HOB_H

/*
 * C interface to the hyperbolic outer billiards library.
 *
 * Every function returns a hob_status. On failure a description is available
 * from hob_last_error() on the calling thread until the next call into the
 * library. Strings returned through char** are owned by the caller and must
 * be released with hob_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HOB_BUILDING_LIBRARY)
#define HOB_API __declspec(dllexport)
#else
#define HOB_API __declspec(dllimport)
#endif
#elif defined(__GNUC__)
#define HOB_API __attribute__((visibility("default")))
#else
#define HOB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hob_status {
  HOB_OK = 0,
  HOB_E_INVALID_ARGUMENT = 1,
  HOB_E_DEGENERATE_GEOMETRY = 2,
  HOB_E_UNSUPPORTED = 3,
  HOB_E_CAP_EXCEEDED = 4,
  HOB_E_EMPTY_LAYER = 5,
  HOB_E_LAYER_OUT_OF_RANGE = 6,
  HOB_E_AMBIGUOUS_SUPPORT = 7,
  HOB_E_INSIDE_TABLE = 8,
  HOB_E_IMAGE_OUTSIDE_ATLAS = 9,
  HOB_E_CENTER_MISMATCH = 10,
  HOB_E_NOT_CYCLIC = 11,
  HOB_E_INVALID_LABEL = 12,
  HOB_E_OVERFLOW = 13,
  HOB_E_PARSE = 14,
  HOB_E_INTERNAL = 15,
  HOB_E_OUT_OF_MEMORY = 16
} hob_status;

typedef enum hob_format { HOB_FORMAT_JSON = 0, HOB_FORMAT_CSV = 1, HOB_FORMAT_TEXT = 2 } hob_format;

typedef enum hob_shape { HOB_SHAPE_M = 0, HOB_SHAPE_N = 1 } hob_shape;

typedef struct hob_atlas hob_atlas;

typedef struct hob_orbit_result {
  double point[3];          /* hyperboloid coordinates (x, y, t) of the start */
  int64_t period;           /* -1 when no return was found */
  int64_t iterations_used;
} hob_orbit_result;

HOB_API const char* hob_last_error(void);
HOB_API const char* hob_status_name(hob_status status);
HOB_API void hob_string_free(char* s);

/* Atlas of all tiles up to max_rank. tile_budget 0 selects the default. */
HOB_API hob_status hob_atlas_build(int m, int n, int max_rank, size_t tile_budget, hob_atlas** out);
HOB_API hob_status hob_atlas_load_json(const char* text, hob_atlas** out);
HOB_API void hob_atlas_free(hob_atlas* atlas);

HOB_API hob_status hob_atlas_tile_count(const hob_atlas* atlas, size_t* out);
HOB_API hob_status hob_atlas_layer_size(const hob_atlas* atlas, int k, hob_shape shape, size_t* out);
HOB_API hob_status hob_atlas_to_json(const hob_atlas* atlas, char** out);
HOB_API hob_status hob_counts_report(const hob_atlas* atlas, hob_format format, char** out);

HOB_API hob_status hob_layer_permutation(const hob_atlas* atlas, int k, hob_shape shape, int64_t* size,
                                         int64_t* jump);
/* All layers of rank 1..max_rank. */
HOB_API hob_status hob_perm_report(const hob_atlas* atlas, hob_format format, char** out);

/* web_depth < 0 disables the web overlay. orbit_chart is NULL or a chart point
   (u, v) whose orbit is drawn when it closes within orbit_max_iter steps. */
HOB_API hob_status hob_render_svg(const hob_atlas* atlas, int web_depth, const double* orbit_chart,
                                  int64_t orbit_max_iter, char** out);

/* Seeded random point inside a tile of rank 1..max_rank, as chart coordinates. */
HOB_API hob_status hob_random_point(const hob_atlas* atlas, int max_rank, uint64_t seed, double* u, double* v);

/* Orbit of the chart point (u, v) about the (m, n) table. */
HOB_API hob_status hob_orbit(int m, int n, double u, double v, int64_t max_iter, hob_orbit_result* out);
HOB_API hob_status hob_orbit_report(const hob_orbit_result* result, hob_format format, char** out);

HOB_API hob_status hob_rotation_numeric(int m, int n, double theta0, int64_t iters, double* out);
HOB_API hob_status hob_rotation_closed(int m, int n, double* out);
HOB_API hob_status hob_rotation_report(int m, int n, double theta0, int64_t iters, hob_format format, char** out);

/* Closed-form q, l, s, p, j for k = 1..k_max (2..k_max when m = 3). */
HOB_API hob_status hob_closed_forms(int m, int n, int k_max, hob_format format, char** out);

/* Full cross-check. *pass is 1 when every check passed. A nonzero
   jump_offset is added to every simulated jump (harness self-test). */
HOB_API hob_status hob_verify(int m, int n, int k_max, int64_t jump_offset, hob_format format, char** report,
                              int* pass);

#ifdef __cplusplus
}
#endif

#endif
