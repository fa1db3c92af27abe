#ifndef POPGRAPH_H
#define POPGRAPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result of a call. The first four values match the `ppg` exit codes.
 */
typedef enum PpgStatus {
  /*
   Success.
   */
  PPG_STATUS_OK = 0,
  /*
   The graph, order, or polarization failed validation.
   */
  PPG_STATUS_INVALID = 1,
  /*
   The input text is not a well-formed `.ppg` document.
   */
  PPG_STATUS_PARSE = 2,
  /*
   Arity mismatch, enumeration bound exceeded, or missing data.
   */
  PPG_STATUS_USAGE = 3,
  /*
   A required pointer argument was null.
   */
  PPG_STATUS_NULL_POINTER = 4,
  /*
   Input text was not valid UTF-8.
   */
  PPG_STATUS_INVALID_UTF8 = 5,
  /*
   An internal panic was caught; the library state is unaffected.
   */
  PPG_STATUS_PANIC = 6,
} PpgStatus;

/*
 Opaque handle to a parsed graph together with whatever order or
 polarization data its document carried.
 */
typedef struct PpgGraph PpgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses NUL-terminated `.ppg` text into a new handle stored in `*out`.

 # Safety
 `text` must be null or a NUL-terminated string; `out` must be null or
 valid for a pointer write.
 */
enum PpgStatus ppg_parse(const char *text, struct PpgGraph **out);

/*
 Releases a handle. Null is ignored.

 # Safety
 `graph` must be null or a handle from this library not yet freed.
 */
void ppg_free(struct PpgGraph *graph);

/*
 Number of edges; 0 for a null handle.

 # Safety
 `graph` must be null or a live handle.
 */
size_t ppg_edge_count(const struct PpgGraph *graph);

/*
 Number of inputs (edges leaving a source); 0 for a null handle.

 # Safety
 `graph` must be null or a live handle.
 */
size_t ppg_input_count(const struct PpgGraph *graph);

/*
 Number of outputs (edges entering a sink); 0 for a null handle.

 # Safety
 `graph` must be null or a live handle.
 */
size_t ppg_output_count(const struct PpgGraph *graph);

/*
 Number of internal vertices; 0 for a null handle.

 # Safety
 `graph` must be null or a live handle.
 */
size_t ppg_internal_vertex_count(const struct PpgGraph *graph);

/*
 Whether the handle carries a planar order (parsed or computed).

 # Safety
 `graph` must be null or a live handle.
 */
bool ppg_has_order(const struct PpgGraph *graph);

/*
 Writes the planar order as space-separated edge ids to `*out`,
 synthesizing it from the polarization and anchor if necessary. The
 synthesized order is kept on the handle.

 # Safety
 `graph` must be null or a live handle; `out` must be null or valid for a
 pointer write.
 */
enum PpgStatus ppg_synthesize_order(struct PpgGraph *graph, char **out);

/*
 Composes `first` then `second` (outputs of `first` glued to inputs of
 `second` in planar order) into a new handle stored in `*out`.

 # Safety
 Both handles must be null or live; `out` must be null or valid for a
 pointer write.
 */
enum PpgStatus ppg_compose(const struct PpgGraph *first,
                           const struct PpgGraph *second,
                           struct PpgGraph **out);

/*
 Counts the planar orders of the underlying graph into `*out`. Graphs
 above the default enumeration bound fail with [`PpgStatus::Usage`].

 # Safety
 `graph` must be null or a live handle; `out` must be null or valid for a
 write.
 */
enum PpgStatus ppg_count_planar_orders(const struct PpgGraph *graph, uint64_t *out);

/*
 Renders an upward drawing as SVG (`tikz` false) or TikZ (`tikz` true)
 into `*out`. With `st` the boundary vertices are merged into a source
 and a sink apex.

 # Safety
 `graph` must be null or a live handle; `out` must be null or valid for a
 pointer write.
 */
enum PpgStatus ppg_render(const struct PpgGraph *graph, bool st, bool tikz, char **out);

/*
 Serializes the handle back to `.ppg` text into `*out`.

 # Safety
 `graph` must be null or a live handle; `out` must be null or valid for a
 pointer write.
 */
enum PpgStatus ppg_emit(const struct PpgGraph *graph, char **out);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a string from this library not yet freed.
 */
void ppg_string_free(char *s);

/*
 Message of the last failed call on this thread, or null if the last
 call succeeded. Valid until the next library call on this thread; do
 not free it.
 */
const char *ppg_last_error_message(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* POPGRAPH_H */
