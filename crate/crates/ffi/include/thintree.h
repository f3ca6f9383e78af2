/* C interface to the thintree verification and reduction library. */

#ifndef THINTREE_H
#define THINTREE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum TtStatus {
  TT_STATUS_OK = 0,
  TT_STATUS_NULL_POINTER = 1,
  TT_STATUS_INVALID_UTF8 = 2,
  TT_STATUS_INVALID_ARGUMENT = 3,
  TT_STATUS_INVALID_CUT = 4,
  TT_STATUS_INVALID_INSTANCE = 5,
  TT_STATUS_GUARD_EXCEEDED = 6,
  TT_STATUS_CONSTRUCTION = 7,
  TT_STATUS_PROTOCOL = 8,
  TT_STATUS_INVARIANT_VIOLATION = 9,
  TT_STATUS_NOT_CLIQUE_RESPECTING = 10,
  TT_STATUS_PARSE_ERROR = 11,
  TT_STATUS_IO_ERROR = 12,
  TT_STATUS_OVERFLOW = 13,
  TT_STATUS_BUFFER_TOO_SMALL = 14,
} TtStatus;

/**
 * A gadget instance (G', T, alpha) produced by `tt_reduce`.
 */
typedef struct TtGadget TtGadget;

/**
 * A parsed graph together with its (possibly defaulted) edge weights.
 */
typedef struct TtGraph TtGraph;

/**
 * A validated spanning tree of some [`TtGraph`].
 */
typedef struct TtTree TtTree;

/**
 * Outcome of a thinness verification.
 */
typedef struct TtVerdict TtVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns a copy of the calling thread's last error message, or NULL if
 * none has been recorded. Free with `tt_string_free`.
 */
char *tt_last_error_message(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned by a `tt_` function that
 * documents `tt_string_free` as its deallocator, or NULL.
 */
void tt_string_free(char *s);

/**
 * Parses a graph file (`p` / `e` lines; optional weight column defaults
 * to +1) into a new graph handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be a valid
 * pointer. On success `*out` owns the graph and must be released with
 * `tt_graph_free`.
 */
enum TtStatus tt_graph_parse(const char *text, struct TtGraph **out);

/**
 * # Safety
 * `graph` must be NULL or a pointer from `tt_graph_parse` not yet freed.
 */
void tt_graph_free(struct TtGraph *graph);

/**
 * # Safety
 * `graph` must be a valid graph handle (NULL returns 0).
 */
size_t tt_graph_vertex_count(const struct TtGraph *graph);

/**
 * # Safety
 * `graph` must be a valid graph handle (NULL returns 0).
 */
size_t tt_graph_edge_count(const struct TtGraph *graph);

/**
 * Parses a tree file (`t` / `i` lines) and validates it as a spanning
 * tree of `graph`.
 *
 * # Safety
 * `graph` must be a valid graph handle, `text` a valid NUL-terminated
 * string, `out` a valid pointer. On success `*out` must be released with
 * `tt_tree_free`.
 */
enum TtStatus tt_tree_parse(const struct TtGraph *graph, const char *text, struct TtTree **out);

/**
 * # Safety
 * `tree` must be NULL or a pointer from `tt_tree_parse` not yet freed.
 */
void tt_tree_free(struct TtTree *tree);

/**
 * # Safety
 * `tree` must be a valid tree handle (NULL returns 0).
 */
size_t tt_tree_edge_count(const struct TtTree *tree);

/**
 * Brute-force thinness verification at threshold `alpha_num/alpha_den`.
 * Refuses graphs with more than `vertex_limit` vertices (pass 26 for the
 * default guard).
 *
 * # Safety
 * `graph` and `tree` must be valid handles for the same graph; `out`
 * must be valid. On success `*out` must be released with
 * `tt_verdict_free`.
 */
enum TtStatus tt_verify_thin(const struct TtGraph *graph,
                             const struct TtTree *tree,
                             int64_t alpha_num,
                             int64_t alpha_den,
                             size_t vertex_limit,
                             struct TtVerdict **out);

/**
 * # Safety
 * `verdict` must be NULL or a pointer from `tt_verify_thin` not yet
 * freed.
 */
void tt_verdict_free(struct TtVerdict *verdict);

/**
 * # Safety
 * `verdict` must be a valid verdict handle (NULL returns false).
 */
bool tt_verdict_is_thin(const struct TtVerdict *verdict);

/**
 * Writes the maximum thickness over all cuts as an exact fraction.
 *
 * # Safety
 * `verdict` must be a valid verdict handle; `num` and `den` may each be
 * NULL to skip that component.
 */
enum TtStatus tt_verdict_worst_thickness(const struct TtVerdict *verdict,
                                         int64_t *num,
                                         int64_t *den);

/**
 * Number of vertices on side A of the violating cut; 0 when the tree is
 * thin (no certificate).
 *
 * # Safety
 * `verdict` must be a valid verdict handle (NULL returns 0).
 */
size_t tt_verdict_certificate_len(const struct TtVerdict *verdict);

/**
 * Copies the violating cut's side-A vertices (ascending) into `buffer`.
 * `*written` receives the number of vertices; fails with
 * `TT_STATUS_BUFFER_TOO_SMALL` when `capacity` is insufficient.
 *
 * # Safety
 * `verdict` must be a valid verdict handle; `buffer` must point to at
 * least `capacity` writable `size_t`s; `written` may be NULL.
 */
enum TtStatus tt_verdict_certificate(const struct TtVerdict *verdict,
                                     size_t *buffer,
                                     size_t capacity,
                                     size_t *written);

/**
 * Exact maximum cut size by enumeration (default 26-vertex guard).
 *
 * # Safety
 * `graph` must be a valid graph handle; `value` must be valid.
 */
enum TtStatus tt_max_cut(const struct TtGraph *graph, size_t *value);

/**
 * Exact maximum average cut weight under the graph's stored weights.
 *
 * # Safety
 * `graph` must be a valid graph handle; `num`/`den` as in
 * `tt_verdict_worst_thickness`.
 */
enum TtStatus tt_max_avg_cut(const struct TtGraph *graph, int64_t *num, int64_t *den);

/**
 * Exact MaxAvgCut decision at threshold `k_num/k_den`.
 *
 * # Safety
 * `graph` must be a valid graph handle; `answer` must be valid.
 */
enum TtStatus tt_max_avg_cut_decision(const struct TtGraph *graph,
                                      int64_t k_num,
                                      int64_t k_den,
                                      bool *answer);

/**
 * Builds the gadget instance (G', T, alpha) for the MaxAvgCut triple
 * (graph, its stored weights, k). Pass multiplier 24 for the sound
 * construction.
 *
 * # Safety
 * `graph` must be a valid graph handle; `out` must be valid. On success
 * `*out` must be released with `tt_gadget_free`.
 */
enum TtStatus tt_reduce(const struct TtGraph *graph,
                        int64_t k_num,
                        int64_t k_den,
                        size_t multiplier,
                        struct TtGadget **out);

/**
 * # Safety
 * `gadget` must be NULL or a pointer from `tt_reduce` not yet freed.
 */
void tt_gadget_free(struct TtGadget *gadget);

/**
 * # Safety
 * `gadget` must be a valid gadget handle (NULL returns 0).
 */
size_t tt_gadget_vertex_count(const struct TtGadget *gadget);

/**
 * # Safety
 * `gadget` must be a valid gadget handle (NULL returns 0).
 */
size_t tt_gadget_edge_count(const struct TtGadget *gadget);

/**
 * The exact alpha threshold of the instance.
 *
 * # Safety
 * `gadget` must be a valid gadget handle; `num`/`den` as in
 * `tt_verdict_worst_thickness`.
 */
enum TtStatus tt_gadget_alpha(const struct TtGadget *gadget, int64_t *num, int64_t *den);

/**
 * Whether the clique-splitting bound is established for this instance's
 * multiplier (true iff multiplier >= 24).
 *
 * # Safety
 * `gadget` must be a valid gadget handle (NULL returns false).
 */
bool tt_gadget_is_sound(const struct TtGadget *gadget);

/**
 * Runs the clique-respecting oracle: `*is_yes` becomes true iff the
 * gadget tree is NOT alpha-thin, equivalently iff the source MaxAvgCut
 * instance is a YES instance.
 *
 * # Safety
 * `gadget` must be a valid gadget handle; `is_yes` must be valid.
 */
enum TtStatus tt_gadget_oracle(const struct TtGadget *gadget, bool *is_yes);

/**
 * Serialises G' in the graph file format. Free with `tt_string_free`.
 *
 * # Safety
 * `gadget` must be a valid gadget handle (NULL returns NULL).
 */
char *tt_gadget_graph_text(const struct TtGadget *gadget);

/**
 * Serialises T in the tree file format. Free with `tt_string_free`.
 *
 * # Safety
 * `gadget` must be a valid gadget handle (NULL returns NULL).
 */
char *tt_gadget_tree_text(const struct TtGadget *gadget);

/**
 * Serialises the sidecar correspondence map (`c` / `d` / `a` lines).
 * Free with `tt_string_free`.
 *
 * # Safety
 * `gadget` must be a valid gadget handle (NULL returns NULL).
 */
char *tt_gadget_map_text(const struct TtGadget *gadget);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THINTREE_H */
