#ifndef ZPAIR_ZPAIR_H
#define ZPAIR_ZPAIR_H

/* C interface to the zpair library.
 *
 * Every function returns a zp_status. On failure the message for the calling
 * thread is available from zp_last_error() until the next call. Strings
 * handed out through char** parameters are owned by the caller and released
 * with zp_string_free().
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ZPAIR_BUILDING_LIBRARY)
#    define ZPAIR_API __declspec(dllexport)
#  else
#    define ZPAIR_API __declspec(dllimport)
#  endif
#else
#  define ZPAIR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zp_status {
  ZP_OK = 0,
  ZP_ERR_INPUT = 1,
  ZP_ERR_HYPOTHESIS = 2,
  ZP_INCONCLUSIVE = 3,
  ZP_ERR_ARGUMENT = 4,
  ZP_ERR_INTERNAL = 5
} zp_status;

typedef struct zp_arrangement zp_arrangement;

typedef struct zp_render_options {
  char chart;            /* 'x', 'y' or 'z'; 0 means 'z' */
  int has_window;        /* nonzero to use window[] */
  const char* window[4]; /* xmin xmax ymin ymax as "p" or "p/q" */
  double stroke_width;   /* <= 0 means the default */
  unsigned samples;      /* 0 means the default */
} zp_render_options;

ZPAIR_API const char* zp_version(void);
ZPAIR_API const char* zp_last_error(void);
ZPAIR_API void zp_string_free(char* s);

ZPAIR_API zp_status zp_arrangement_parse(const char* text, zp_arrangement** out);
ZPAIR_API zp_status zp_arrangement_load(const char* path, zp_arrangement** out);
ZPAIR_API void zp_arrangement_free(zp_arrangement* a);
ZPAIR_API zp_status zp_arrangement_serialize(const zp_arrangement* a, char** out);
ZPAIR_API zp_status zp_arrangement_size(const zp_arrangement* a, size_t* out);

/* Text reports. */
ZPAIR_API zp_status zp_analyze(const zp_arrangement* a, char** report);
ZPAIR_API zp_status zp_compare(const zp_arrangement* a1, const zp_arrangement* a2,
                               size_t* equivalence_count, char** report);

/* ZP_ERR_HYPOTHESIS when the split violates the hypotheses; the report is
 * still produced. connected_number is 0 in that case. */
ZPAIR_API zp_status zp_split(const zp_arrangement* a, const char* branch, const char* curve,
                             int* connected_number, int* projective_dimension, char** report);

/* ZP_OK for a candidate pair, ZP_INCONCLUSIVE otherwise. */
ZPAIR_API zp_status zp_zariski(const zp_arrangement* a1, const zp_arrangement* a2,
                               const char* branch1, const char* curve1, const char* branch2,
                               const char* curve2, char** report);

/* ZP_OK when minimal, ZP_INCONCLUSIVE when some deletion is not certified. */
ZPAIR_API zp_status zp_minimality(const zp_arrangement* a1, const zp_arrangement* a2,
                                  char** report);

/* options may be NULL. */
ZPAIR_API zp_status zp_render_svg(const zp_arrangement* a, const zp_render_options* options,
                                  char** svg);

#ifdef __cplusplus
}
#endif

#endif
