#ifndef AFFINE_CLUSTER_H
#define AFFINE_CLUSTER_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  AC_STATUS_OK = 0,
  AC_STATUS_NULL_POINTER = 1,
  AC_STATUS_INVALID_ARGUMENT = 2,
  AC_STATUS_INDEX_OUT_OF_FAMILY = 3,
  AC_STATUS_UNSUPPORTED_CASE = 4,
  AC_STATUS_PARSE_ERROR = 5,
  AC_STATUS_NOT_DIVISIBLE = 6,
  AC_STATUS_LIMIT_EXCEEDED = 7,
  AC_STATUS_VERIFICATION_FAILED = 8,
  AC_STATUS_INTERNAL = 9,
  AC_STATUS_PANIC = 10,
} AcStatus;

/**
 * Graph family selector for [`ac_graph_build`].
 */
typedef enum {
  /**
   * The graph `G_n` of the `(b,c)` case.
   */
  AC_FAMILY_STANDARD = 0,
  /**
   * The `(1,4)` tilde graph with index `n`.
   */
  AC_FAMILY_TILDE = 1,
  /**
   * The 2-by-`n` grid.
   */
  AC_FAMILY_GRID = 2,
} AcFamily;

/**
 * Graph export format.
 */
typedef enum {
  AC_FORMAT_JSON = 0,
  AC_FORMAT_DOT = 1,
} AcFormat;

/**
 * Weighted graph.
 */
typedef struct AcGraph AcGraph;

/**
 * Laurent polynomial in `x1`, `x2` with integer coefficients.
 */
typedef struct AcLaurent AcLaurent;

/**
 * Memoized sequence `x_n` for one `(b,c)` case.
 */
typedef struct AcSequence AcSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *ac_last_error(void);

/**
 * Static description of a status code.
 */
const char *ac_status_message(AcStatus status);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library that has not
 * been freed yet.
 */
void ac_string_free(char *s);

/**
 * Creates the sequence for the case `(b,c)`; both must be positive.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
AcStatus ac_sequence_new(uint32_t b, uint32_t c, AcSequence **out);

/**
 * # Safety
 * `seq` must be null or a handle from [`ac_sequence_new`] not yet freed.
 */
void ac_sequence_free(AcSequence *seq);

/**
 * Writes a new handle holding `x_n`.
 *
 * # Safety
 * `seq` must be a live sequence handle and `out` valid for one write.
 */
AcStatus ac_sequence_x(AcSequence *seq, int64_t n, AcLaurent **out);

/**
 * Writes `x_n(1,1)` as a decimal string.
 *
 * # Safety
 * `seq` must be a live sequence handle and `out` valid for one write.
 */
AcStatus ac_sequence_eval_at_ones(AcSequence *seq, int64_t n, char **out);

/**
 * Parses text such as `x1^-1*x2 + 3`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for one write.
 */
AcStatus ac_laurent_parse(const char *text, AcLaurent **out);

/**
 * # Safety
 * `p` must be null or a Laurent handle not yet freed.
 */
void ac_laurent_free(AcLaurent *p);

/**
 * Writes the text form: flat terms when `expanded` is true, otherwise a
 * numerator over a monomial denominator.
 *
 * # Safety
 * `p` must be a live Laurent handle and `out` valid for one write.
 */
AcStatus ac_laurent_to_string(const AcLaurent *p, bool expanded, char **out);

/**
 * Writes the JSON form, an array of `[e1, e2, "coefficient"]` triples.
 *
 * # Safety
 * `p` must be a live Laurent handle and `out` valid for one write.
 */
AcStatus ac_laurent_to_json(const AcLaurent *p, char **out);

/**
 * Writes the value at `x1 = x2 = 1` as a decimal string.
 *
 * # Safety
 * `p` must be a live Laurent handle and `out` valid for one write.
 */
AcStatus ac_laurent_eval_at_ones(const AcLaurent *p, char **out);

/**
 * Writes `a * b` as a new handle.
 *
 * # Safety
 * `a` and `b` must be live Laurent handles and `out` valid for one write.
 */
AcStatus ac_laurent_mul(const AcLaurent *a, const AcLaurent *b, AcLaurent **out);

/**
 * Writes `a / b` as a new handle; fails with `NotDivisible` unless the
 * quotient is a Laurent polynomial.
 *
 * # Safety
 * `a` and `b` must be live Laurent handles and `out` valid for one write.
 */
AcStatus ac_laurent_div_exact(const AcLaurent *a, const AcLaurent *b, AcLaurent **out);

/**
 * True when both handles hold the same polynomial. Null handles compare
 * unequal.
 *
 * # Safety
 * `a` and `b` must each be null or a live Laurent handle.
 */
bool ac_laurent_equal(const AcLaurent *a, const AcLaurent *b);

/**
 * Builds a family graph. For [`AcFamily::Standard`] the case must be
 * `(2,2)` or `(1,4)`; [`AcFamily::Tilde`] requires `(1,4)`; the grid
 * ignores `b` and `c` and needs `n >= 1`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
AcStatus ac_graph_build(uint32_t b, uint32_t c, AcFamily family, int64_t n, AcGraph **out);

/**
 * # Safety
 * `g` must be null or a graph handle not yet freed.
 */
void ac_graph_free(AcGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t ac_graph_vertex_count(const AcGraph *g);

/**
 * Edge count including arcs, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t ac_graph_edge_count(const AcGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle and `out` valid for one write.
 */
AcStatus ac_graph_export(const AcGraph *g, AcFormat format, char **out);

/**
 * Writes the perfect-matching polynomial as a new handle.
 *
 * # Safety
 * `g` must be a live graph handle and `out` valid for one write.
 */
AcStatus ac_graph_match_polynomial(const AcGraph *g, AcLaurent **out);

/**
 * Writes the number of perfect matchings as a decimal string.
 *
 * # Safety
 * `g` must be a live graph handle and `out` valid for one write.
 */
AcStatus ac_graph_match_count(const AcGraph *g, char **out);

/**
 * Runs the full identity suite up to `max_index` (at least 5) and writes
 * the reports as a JSON array. Returns `VerificationFailed` when any
 * identity fails; the report is written in that case too.
 *
 * # Safety
 * `out` must be valid for one write.
 */
AcStatus ac_verify_suite(int64_t max_index, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AFFINE_CLUSTER_H */
