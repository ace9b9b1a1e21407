#ifndef TURAN_H
#define TURAN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TuranBoundKind {
  TURAN_BOUND_KIND_EXACT = 0,
  TURAN_BOUND_KIND_UPPER_BOUND = 1,
  TURAN_BOUND_KIND_LOWER_BOUND = 2,
} TuranBoundKind;

/**
 * Families for `turan_construct`, with their parameters in order.
 */
typedef enum TuranFamily {
  /**
   * k
   */
  TURAN_FAMILY_MATCHING = 0,
  /**
   * k
   */
  TURAN_FAMILY_STAR = 1,
  /**
   * k
   */
  TURAN_FAMILY_PATH = 2,
  /**
   * k
   */
  TURAN_FAMILY_CYCLE = 3,
  /**
   * t
   */
  TURAN_FAMILY_COMPLETE = 4,
  /**
   * s, t
   */
  TURAN_FAMILY_COMPLETE_BIPARTITE = 5,
  /**
   * n
   */
  TURAN_FAMILY_EMPTY = 6,
  /**
   * p, m
   */
  TURAN_FAMILY_TURAN_GRAPH = 7,
  /**
   * n, variant
   */
  TURAN_FAMILY_EDGE_EXTREMAL = 8,
  /**
   * n
   */
  TURAN_FAMILY_MATCHING_JOIN = 9,
  /**
   * n
   */
  TURAN_FAMILY_APEX_BIPARTITE = 10,
  /**
   * n, p, t
   */
  TURAN_FAMILY_H_NPT = 11,
  /**
   * n, p, t
   */
  TURAN_FAMILY_H_PLUS = 12,
} TuranFamily;

typedef enum TuranFormula {
  TURAN_FORMULA_C33_EDGES = 0,
  TURAN_FORMULA_C33_TRIANGLES = 1,
  TURAN_FORMULA_P33_TRIANGLES = 2,
  TURAN_FORMULA_M23_TRIANGLES = 3,
} TuranFormula;

typedef enum TuranPattern {
  TURAN_PATTERN_C33 = 0,
  TURAN_PATTERN_P33 = 1,
  TURAN_PATTERN_M23 = 2,
  TURAN_PATTERN_K5 = 3,
  TURAN_PATTERN_K5_MINUS = 4,
} TuranPattern;

typedef enum TuranStatus {
  TURAN_STATUS_OK = 0,
  TURAN_STATUS_NULL_POINTER = 1,
  TURAN_STATUS_INVALID_ARGUMENT = 2,
  TURAN_STATUS_OUT_OF_RANGE = 3,
  TURAN_STATUS_PARSE_ERROR = 4,
  TURAN_STATUS_BELOW_THRESHOLD = 5,
  TURAN_STATUS_BUDGET_EXCEEDED = 6,
  TURAN_STATUS_BUFFER_TOO_SMALL = 7,
  TURAN_STATUS_INTERNAL = 8,
} TuranStatus;

/**
 * Opaque graph handle.
 */
typedef struct TuranGraph TuranGraph;

typedef struct TuranBound {
  uint64_t n;
  uint64_t value;
  enum TuranBoundKind kind;
  /**
   * Smallest n for which the value is asserted.
   */
  uint64_t valid_from;
  /**
   * The expression was floored because it is not integral.
   */
  bool odd_case;
} TuranBound;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next library call on the same thread; do not free.
 */
const char *turan_last_error(void);

/**
 * Library version as a static string; do not free.
 */
const char *turan_version(void);

/**
 * Empty graph on `n` vertices, or NULL on failure.
 */
struct TuranGraph *turan_graph_new(uintptr_t n);

/**
 * Copy of `g`, or NULL on failure.
 */
struct TuranGraph *turan_graph_clone(const struct TuranGraph *g);

/**
 * Releases a handle; NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and must not be used afterwards.
 */
void turan_graph_free(struct TuranGraph *g);

/**
 * Number of vertices; 0 for NULL.
 */
uintptr_t turan_graph_order(const struct TuranGraph *g);

/**
 * Number of edges; 0 for NULL.
 */
uintptr_t turan_graph_edge_count(const struct TuranGraph *g);

/**
 * t(G); 0 for NULL.
 */
uint64_t turan_graph_triangle_count(const struct TuranGraph *g);

enum TuranStatus turan_graph_add_edge(struct TuranGraph *g, uintptr_t u, uintptr_t v);

enum TuranStatus turan_graph_remove_edge(struct TuranGraph *g, uintptr_t u, uintptr_t v);

enum TuranStatus turan_graph_has_edge(const struct TuranGraph *g,
                                      uintptr_t u,
                                      uintptr_t v,
                                      bool *out);

/**
 * t(v): triangles through `v`.
 */
enum TuranStatus turan_graph_triangles_at(const struct TuranGraph *g, uintptr_t v, uint64_t *out);

/**
 * t(u, v): triangles through `u` or `v`.
 */
enum TuranStatus turan_graph_triangles_at_pair(const struct TuranGraph *g,
                                               uintptr_t u,
                                               uintptr_t v,
                                               uint64_t *out);

/**
 * Parses graph6 text into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string.
 */
enum TuranStatus turan_graph_from_graph6(const char *text, struct TuranGraph **out);

/**
 * graph6 text of `g`, or NULL on failure. Release with `turan_string_free`.
 */
char *turan_graph_to_graph6(const struct TuranGraph *g);

/**
 * Releases a string returned by this library; NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void turan_string_free(char *s);

/**
 * Builds a family member from `len` parameters.
 *
 * # Safety
 * `params` must point to `len` readable values (may be NULL when `len` is 0).
 */
enum TuranStatus turan_construct(enum TuranFamily family,
                                 const uintptr_t *params,
                                 uintptr_t len,
                                 struct TuranGraph **out);

/**
 * Replaces every edge of `g` by a clique on `p` vertices.
 */
enum TuranStatus turan_edge_blowup(const struct TuranGraph *g,
                                   uintptr_t p,
                                   struct TuranGraph **out);

/**
 * Looks for a named pattern. On a hit, `embedding[i]` receives the host image
 * of pattern vertex `i` when `embedding` is non-NULL; `len` (optional)
 * receives the pattern order, or 0 when absent.
 */
enum TuranStatus turan_contains(const struct TuranGraph *g,
                                enum TuranPattern pattern,
                                bool *found,
                                uintptr_t *embedding,
                                uintptr_t cap,
                                uintptr_t *len);

/**
 * As `turan_contains`, with an explicit pattern graph.
 */
enum TuranStatus turan_contains_graph(const struct TuranGraph *g,
                                      const struct TuranGraph *pattern,
                                      bool *found,
                                      uintptr_t *embedding,
                                      uintptr_t cap,
                                      uintptr_t *len);

enum TuranStatus turan_formula(enum TuranFormula which, uint64_t n, struct TuranBound *out);

/**
 * Exact ex(n, K_3, pattern) for small n; `witness` (optional) receives one optimal graph.
 */
enum TuranStatus turan_ex_exact(uintptr_t n,
                                enum TuranPattern pattern,
                                uint64_t *value,
                                struct TuranGraph **witness);

/**
 * Seeded local search for a lower bound on ex(n, K_3, pattern). Zero
 * `restarts` or `iterations` select the defaults.
 */
enum TuranStatus turan_ex_search(uintptr_t n,
                                 enum TuranPattern pattern,
                                 uint64_t seed,
                                 uintptr_t restarts,
                                 uintptr_t iterations,
                                 uint64_t *value,
                                 struct TuranGraph **witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TURAN_H */
