/* C interface to rigidkit.
 *
 * Every function returns an rk_status. On failure a human readable message
 * for the calling thread is available from rk_last_error(). Strings returned
 * through char** parameters are owned by the caller and must be released
 * with rk_string_free(); frameworks with rk_framework_free().
 */
#ifndef RIGIDKIT_RIGIDKIT_H
#define RIGIDKIT_RIGIDKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RIGIDKIT_BUILDING)
#    define RK_API __declspec(dllexport)
#  else
#    define RK_API __declspec(dllimport)
#  endif
#else
#  define RK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
  RK_OK = 0,
  RK_ERROR_INVALID_ARGUMENT = 1,
  RK_ERROR_PARSE = 2,
  RK_ERROR_DIMENSION_MISMATCH = 3,
  RK_ERROR_GRAPH_MISMATCH = 4,
  RK_ERROR_OUT_OF_RANGE = 5,
  RK_ERROR_DIVISION_BY_ZERO = 6,
  RK_ERROR_AFFINE_SPAN_TOO_SMALL = 7,
  RK_ERROR_NOT_A_HYPERPLANE = 8,
  RK_ERROR_BASE_NOT_COMPLETE = 9,
  RK_ERROR_PENDANT_ATTACHED_OUTSIDE_BASE = 10,
  RK_ERROR_EMPTY_PENDANTS = 11,
  RK_ERROR_CONTINUUM_OF_REALIZATIONS = 12,
  RK_ERROR_DEGENERATE_SPAN = 13,
  RK_ERROR_TOO_FEW_VERTICES = 14,
  RK_ERROR_INTERNAL = 99
} rk_status;

typedef enum rk_verdict {
  RK_GLOBALLY_RIGID = 0,
  RK_NOT_GLOBALLY_RIGID = 1,
  RK_FLEXIBLE = 2
} rk_verdict;

typedef enum rk_format { RK_FORMAT_TEXT = 0, RK_FORMAT_JSON = 1 } rk_format;

/* Opaque framework: graph, exact configuration and an optional base. */
typedef struct rk_framework rk_framework;

RK_API const char* rk_version(void);
RK_API const char* rk_status_name(rk_status status);
RK_API const char* rk_last_error(void);
RK_API void rk_string_free(char* s);

/* Default dimension cap for paper commands (RIGIDKIT_MAX_DIM or 12). */
RK_API int rk_max_dim(void);

RK_API rk_status rk_framework_parse(const char* json, rk_framework** out);
/* label is one of p, q, r, s, t. */
RK_API rk_status rk_framework_generate(int dim, char label, int apply_affine, rk_framework** out);
RK_API rk_status rk_framework_to_json(const rk_framework* f, char** out);
RK_API void rk_framework_free(rk_framework* f);

RK_API rk_status rk_framework_dim(const rk_framework* f, int* out);
RK_API rk_status rk_framework_vertex_count(const rk_framework* f, size_t* out);
RK_API rk_status rk_framework_edge_count(const rk_framework* f, size_t* out);
/* Exact squared distance between two joints as a rational string. */
RK_API rk_status rk_framework_squared_distance(const rk_framework* f, uint32_t u, uint32_t v, char** out);

RK_API rk_status rk_is_equivalent(const rk_framework* f, const rk_framework* g, int* out);
RK_API rk_status rk_is_congruent(const rk_framework* f, const rk_framework* g, int* out);

/* base may be NULL to use the framework's own base. witness may be NULL;
 * otherwise it receives a new framework (or NULL when there is none). */
RK_API rk_status rk_decide_global_rigidity(const rk_framework* f, const uint32_t* base, size_t base_len,
                                           rk_verdict* verdict, rk_framework** witness);

RK_API rk_status rk_is_infinitesimally_rigid(const rk_framework* f, int* out);
RK_API rk_status rk_generic_global_rigidity(const rk_framework* f, int trials, uint64_t seed, int* certified);

/* Commands. exit_code follows the CLI contract: 0 ok, 1 failed, 2 usage. */
RK_API rk_status rk_paper_verify(int dim, int max_dim, rk_format format, char** report, int* exit_code);

/* checks: comma separated subset of equivalence-vs, congruence-vs,
 * infinitesimal, generic-global, enumerate, decide. versus, base and
 * witness may be NULL. */
RK_API rk_status rk_analyze(const rk_framework* f, const rk_framework* versus, const uint32_t* base,
                            size_t base_len, const char* checks, int trials, uint64_t seed, rk_format format,
                            char** report, rk_framework** witness, int* exit_code);

/* Axes are 1-based coordinate indices. */
RK_API rk_status rk_render_svg(const rk_framework* f, int axis_x, int axis_y, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* RIGIDKIT_RIGIDKIT_H */
