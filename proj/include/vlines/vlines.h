/* C interface to the vlines library.
 *
 * Families are opaque handles. Analyses return reports as JSON strings
 * owned by the caller (free with vl_string_free). Every function returns
 * a status; on failure vl_last_error() describes it for the calling thread.
 */
#ifndef VLINES_H
#define VLINES_H

#include <stdint.h>

#if defined(_WIN32)
#define VL_API __declspec(dllexport)
#else
#define VL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vl_family vl_family;

typedef enum vl_status {
  VL_OK = 0,
  VL_ERR_INVALID_ARGUMENT,
  VL_ERR_FIELD_MISMATCH,
  VL_ERR_PARSE,
  VL_ERR_DEGENERATE_LINE,
  VL_ERR_DEGENERATE_SPAN,
  VL_ERR_NOT_A_LINE,
  VL_ERR_BASE_POINT,
  VL_ERR_CONTRACTED_LINE,
  VL_ERR_PROJECTION_NOT_ISOMORPHIC,
  VL_ERR_NOT_AN_ISOMORPHISM,
  VL_ERR_EMPTY_JUMPING_SET,
  VL_ERR_WRONG_DIMENSION,
  VL_ERR_ANTISYMMETRY,
  VL_ERR_INTERNAL
} vl_status;

typedef struct vl_options {
  uint64_t seed;    /* all random choices derive from it */
  int trials;       /* 0: the analysis default */
  uint32_t prime;   /* reduction prime for families over Q */
  int exhaustive;   /* jumping lines: -1 auto, 0 sampled, 1 exhaustive */
  int target;       /* projection: m of the target G(1,m) */
} vl_options;

VL_API void vl_options_init(vl_options* opts);

VL_API const char* vl_version(void);
VL_API const char* vl_status_name(vl_status status);
/* Message of the last failure on this thread, "" if none. */
VL_API const char* vl_last_error(void);
/* The same as {"code", "message", "witness": [indices]}. */
VL_API const char* vl_last_error_json(void);

VL_API void vl_string_free(char* s);

VL_API vl_status vl_family_from_json(const char* json, vl_family** out);
VL_API vl_status vl_family_to_json(const vl_family* f, char** out);
VL_API void vl_family_free(vl_family* f);

/* example: "split", "cone", "chordal", "quadric", "quadric-line" or
 * 2.1 .. 2.5; n = 0 picks the example's own; prime = 0 means Q. */
VL_API vl_status vl_atlas(const char* example, int n, uint32_t prime, uint64_t seed, vl_family** out);

VL_API vl_status vl_validate(const vl_family* f, const vl_options* opts, char** report);
VL_API vl_status vl_classify(const vl_family* f, const vl_options* opts, char** report);
/* line_json: {"p": [...], "q": [...]} or NULL for the generic type only. */
VL_API vl_status vl_splitting(const vl_family* f, const char* line_json, const vl_options* opts, char** report);
VL_API vl_status vl_jumping(const vl_family* f, const vl_options* opts, char** report);
VL_API vl_status vl_bidegree(const vl_family* f, const vl_options* opts, char** report);
VL_API vl_status vl_swept(const vl_family* f, const vl_options* opts, char** report);
/* matrix_json: rows of pi, or NULL for a random pi onto P^target. */
VL_API vl_status vl_project(const vl_family* f, const char* matrix_json, const vl_options* opts, char** report);

/* coord_json: {"field", "n", "a": upper triangular rows}. */
VL_API vl_status vl_normal_form(const char* coord_json, char** report);
/* Random triangular coefficients with nonzero diagonal; prime = 0 means Q. */
VL_API vl_status vl_random_coord(int n, uint32_t prime, uint64_t seed, char** coord_json);

#ifdef __cplusplus
}
#endif

#endif
