#ifndef KHRANK_H
#define KHRANK_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum KhrankStatus {
  KHRANK_STATUS_OK = 0,
  KHRANK_STATUS_NULL_POINTER = 1,
  KHRANK_STATUS_INVALID_UTF8 = 2,
  KHRANK_STATUS_PARSE_ERROR = 3,
  KHRANK_STATUS_INVALID_INPUT = 4,
  KHRANK_STATUS_CROSSING_CAP = 5,
  KHRANK_STATUS_DISCONNECTED_CLOSURE = 6,
  KHRANK_STATUS_INTERNAL = 7,
} KhrankStatus;

/**
 * Opaque link diagram.
 */
typedef struct KhrankDiagram KhrankDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *khrank_last_error(void);

/**
 * Library version, a static string.
 */
const char *khrank_version(void);

/**
 * Parses PD text such as `X(1,3,2,4);X(3,1,4,2)`.
 *
 * # Safety
 * `pd` must be a NUL-terminated string; `out` must be writable.
 */
enum KhrankStatus khrank_diagram_from_pd(const char *pd, struct KhrankDiagram **out);

/**
 * Closure of a braid given as `l:w`.
 *
 * # Safety
 * `braid` must be a NUL-terminated string; `out` must be writable.
 */
enum KhrankStatus khrank_diagram_from_braid(const char *braid, struct KhrankDiagram **out);

/**
 * Braid closure together with its axis.
 *
 * # Safety
 * `braid` must be a NUL-terminated string; `out` must be writable.
 */
enum KhrankStatus khrank_diagram_axis_link(const char *braid, struct KhrankDiagram **out);

/**
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum KhrankStatus khrank_diagram_mirror(const struct KhrankDiagram *d, struct KhrankDiagram **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `d` must be NULL or a handle not yet freed.
 */
void khrank_diagram_free(struct KhrankDiagram *d);

/**
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum KhrankStatus khrank_diagram_components(const struct KhrankDiagram *d, size_t *out);

/**
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum KhrankStatus khrank_diagram_crossings(const struct KhrankDiagram *d, size_t *out);

/**
 * Total rank of unreduced Khovanov homology over Z/2. `max_crossings` 0
 * selects the default cap.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum KhrankStatus khrank_kh_total(const struct KhrankDiagram *d,
                                  size_t max_crossings,
                                  uint64_t *out);

/**
 * Total rank of reduced Khovanov homology, basepoint on arc 1 (or the first
 * free loop).
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum KhrankStatus khrank_kh_reduced_total(const struct KhrankDiagram *d,
                                          size_t max_crossings,
                                          uint64_t *out);

/**
 * Rank report as JSON; free with `khrank_string_free`.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum KhrankStatus khrank_rank_report_json(const struct KhrankDiagram *d,
                                          size_t max_crossings,
                                          char **out);

/**
 * Classification report as JSON; free with `khrank_string_free`.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum KhrankStatus khrank_classify_json(const struct KhrankDiagram *d,
                                       size_t max_crossings,
                                       char **out);

/**
 * Canonical axis-link Alexander polynomial of a braid, e.g. `x^2+x*y+y^2`.
 *
 * # Safety
 * `braid` must be a NUL-terminated string; `out` must be writable.
 */
enum KhrankStatus khrank_axis_polynomial(const char *braid, char **out);

/**
 * Alexander report of a braid's axis link as JSON.
 *
 * # Safety
 * `braid` must be a NUL-terminated string; `out` must be writable.
 */
enum KhrankStatus khrank_alex_json(const char *braid, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void khrank_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KHRANK_H */
