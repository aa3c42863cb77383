#ifndef BICOMP_H
#define BICOMP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call. `BICOMP_STATUS_OK` is zero.
 */
typedef enum BicompStatus {
  BICOMP_STATUS_OK = 0,
  BICOMP_STATUS_NULL_POINTER = 1,
  BICOMP_STATUS_INDEX_OUT_OF_RANGE = 2,
  BICOMP_STATUS_DUPLICATE_EDGE = 3,
  BICOMP_STATUS_TOO_SMALL = 4,
  BICOMP_STATUS_TOO_LARGE = 5,
  BICOMP_STATUS_INVALID_TRIPLE = 6,
  BICOMP_STATUS_PRECONDITION_VIOLATED = 7,
  BICOMP_STATUS_UNKNOWN_FAMILY = 8,
  BICOMP_STATUS_PARSE = 9,
  BICOMP_STATUS_INVALID_UTF8 = 10,
  BICOMP_STATUS_INTERNAL = 11,
} BicompStatus;

/**
 * Opaque graph handle.
 */
typedef struct BicompGraph BicompGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a graph with parts of size `r` and `s` and `edge_count` edges,
 * given as `edge_count` consecutive `(i, j)` pairs in `edges` (1-based).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (it may be null
 * when `edge_count` is 0) and `out` must be writable.
 */
enum BicompStatus bicomp_graph_new(size_t r,
                                   size_t s,
                                   const size_t *edges,
                                   size_t edge_count,
                                   struct BicompGraph **out);

/**
 * Parses a graph in edge-list format (`r s` header, then one `i j` per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` must be writable.
 */
enum BicompStatus bicomp_graph_parse(const char *text, struct BicompGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle returned by this library that has not been freed.
 */
void bicomp_graph_free(struct BicompGraph *g);

/**
 * Writes the bipartite complement of `g` to `out` as a new handle.
 *
 * # Safety
 * `g` must be a live handle and `out` must be writable.
 */
enum BicompStatus bicomp_graph_complement(const struct BicompGraph *g, struct BicompGraph **out);

/**
 * Part sizes `r` and `s`.
 *
 * # Safety
 * `g` must be a live handle; `r` and `s` must be writable.
 */
enum BicompStatus bicomp_graph_shape(const struct BicompGraph *g, size_t *r, size_t *s);

/**
 * # Safety
 * `g` must be a live handle and `out` must be writable.
 */
enum BicompStatus bicomp_graph_edge_count(const struct BicompGraph *g, size_t *out);

/**
 * Copies up to `capacity` edges, in sorted order, as `(i, j)` pairs into
 * `buf` and stores the total edge count in `total`. Call with `capacity` 0
 * to query the size.
 *
 * # Safety
 * `g` must be a live handle, `buf` must have room for `2 * capacity`
 * values (null allowed when `capacity` is 0) and `total` must be writable.
 */
enum BicompStatus bicomp_graph_edges(const struct BicompGraph *g,
                                     size_t *buf,
                                     size_t capacity,
                                     size_t *total);

/**
 * Edge connectivity `κ'(g)`. Needs at least two vertices.
 *
 * # Safety
 * `g` must be a live handle and `out` must be writable.
 */
enum BicompStatus bicomp_edge_connectivity(const struct BicompGraph *g, size_t *out);

/**
 * Vertex connectivity `κ(g)`. Needs at least two vertices.
 *
 * # Safety
 * `g` must be a live handle and `out` must be writable.
 */
enum BicompStatus bicomp_vertex_connectivity(const struct BicompGraph *g, size_t *out);

/**
 * Upper bound on `κ'(G) + κ'(G^bc)` (and on `κ`) for `r <= s` and
 * `m <= floor(rs/2)` edges.
 *
 * # Safety
 * `out` must be writable.
 */
enum BicompStatus bicomp_n_upper(size_t r, size_t s, size_t m, size_t *out);

/**
 * Upper bound on `κ'(G) κ'(G^bc)` (and on `κ`), same domain as `bicomp_n_upper`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BicompStatus bicomp_m_upper(size_t r, size_t s, size_t m, size_t *out);

/**
 * Builds the extremal graph of a witness family, named as in the CLI
 * (`"s3-g1"` .. `"s4-g7"`). `m` is ignored by the `s3-*` families.
 *
 * # Safety
 * `family` must be a NUL-terminated string and `out` must be writable.
 */
enum BicompStatus bicomp_build_witness(const char *family,
                                       size_t r,
                                       size_t s,
                                       size_t m,
                                       struct BicompGraph **out);

/**
 * Copies the last error message of this thread into `buf` (truncated and
 * NUL-terminated) and returns the full message length in bytes, excluding
 * the terminator.
 *
 * # Safety
 * `buf` must have room for `len` bytes, or be null with `len` 0.
 */
size_t bicomp_last_error(char *buf, size_t len);

/**
 * Static description of a status code.
 */
const char *bicomp_status_str(enum BicompStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BICOMP_H */
