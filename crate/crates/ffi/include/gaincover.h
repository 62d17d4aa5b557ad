#ifndef GAINCOVER_H
#define GAINCOVER_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum GcStatus {
  GC_STATUS_OK = 0,
  GC_STATUS_NULL_POINTER = 1,
  GC_STATUS_INVALID_UTF8 = 2,
  GC_STATUS_PARSE = 3,
  GC_STATUS_INVALID_ARGUMENT = 4,
  GC_STATUS_NUMERIC = 5,
  GC_STATUS_FALSIFIED = 6,
  GC_STATUS_INTERNAL = 7,
} GcStatus;

/**
 * A gain graph.
 */
typedef struct GcGainGraph GcGainGraph;

/**
 * A plain graph: parsed from an edge list or produced by a lift.
 */
typedef struct GcGraph GcGraph;

/**
 * Outcome of the two-eigenvalue classification.
 */
typedef struct GcTwoEv {
  bool is_two_ev;
  bool cover_connected;
  size_t distinct_new;
  /**
   * When `is_two_ev`: the new eigenvalues and their multiplicities.
   */
  double theta;
  double tau;
  size_t mult_theta;
  size_t mult_tau;
  /**
   * `theta + tau`.
   */
  int64_t lambda;
  /**
   * `-theta * tau`.
   */
  int64_t mu;
} GcTwoEv;

/**
 * Regularity verdicts; `*_present` flags guard the parameter fields.
 */
typedef struct GcRegularity {
  bool walk_regular;
  bool distance_regular;
  size_t diameter;
  bool antipodal;
  bool srg_present;
  size_t srg_n;
  size_t srg_k;
  size_t srg_a;
  size_t srg_c;
  bool drackn_present;
  size_t drackn_n;
  size_t drackn_r;
  size_t drackn_t;
} GcRegularity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *gc_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *gc_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void gc_string_free(char *s);

/**
 * Parses gain-file text.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum GcStatus gc_gain_graph_parse(const char *text, struct GcGainGraph **out);

/**
 * # Safety
 * `f` must be null or a handle from this library, freed at most once.
 */
void gc_gain_graph_free(struct GcGainGraph *f);

/**
 * Canonical gain-file text.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum GcStatus gc_gain_graph_to_text(const struct GcGainGraph *f, char **out);

/**
 * The covering graph.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum GcStatus gc_gain_graph_lift(const struct GcGainGraph *f, struct GcGraph **out);

/**
 * Exact two-eigenvalue classification.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum GcStatus gc_gain_graph_classify(const struct GcGainGraph *f, struct GcTwoEv *out);

/**
 * Full JSON report with clustering tolerance `tol`.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum GcStatus gc_gain_graph_report_json(const struct GcGainGraph *f, double tol, char **out);

/**
 * Parses edge-list text.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum GcStatus gc_graph_parse(const char *text, struct GcGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, freed at most once.
 */
void gc_graph_free(struct GcGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t gc_graph_vertex_count(const struct GcGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t gc_graph_edge_count(const struct GcGraph *g);

/**
 * Edge-list text.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GcStatus gc_graph_to_text(const struct GcGraph *g, char **out);

/**
 * Exact characteristic polynomial as comma-separated ascending integer
 * coefficients.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GcStatus gc_graph_char_poly(const struct GcGraph *g, char **out);

/**
 * Walk, distance, strong and antipodal regularity plus drackn
 * parameters.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum GcStatus gc_graph_certify(const struct GcGraph *g, struct GcRegularity *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAINCOVER_H */
