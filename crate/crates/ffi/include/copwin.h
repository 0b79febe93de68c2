#ifndef COPWIN_H
#define COPWIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Stands for an infinite rank or capture time.
#define CW_INFINITE UINT32_MAX

// Largest supported order.
#define CW_MAX_ORDER 64

typedef enum CwStatus {
  CW_STATUS_OK = 0,
  CW_STATUS_NULL_POINTER = 1,
  // A vertex index is out of range, or the order is unsupported.
  CW_STATUS_RANGE = 2,
  CW_STATUS_ARGUMENT = 3,
  CW_STATUS_PARSE = 4,
  // The graph is not cop-win, so the requested value does not exist.
  CW_STATUS_NOT_COP_WIN = 5,
  // The output buffer is too small; the required length was written.
  CW_STATUS_BUFFER_TOO_SMALL = 6,
  CW_STATUS_UTF8 = 7,
  CW_STATUS_PANIC = 8,
} CwStatus;

typedef enum CwTop {
  CW_TOP_TOP0 = 0,
  CW_TOP_TOP1 = 1,
  // The graph is a clique (rank 1).
  CW_TOP_CLIQUE = 2,
} CwTop;

// Opaque graph handle.
typedef struct CwGraph CwGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`u0, v0, u1, v1, ...`). Loops are ignored.
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (it may be null
// when `edge_count` is 0) and `out` must be writable.
enum CwStatus cw_graph_from_edges(size_t n,
                                  const uint32_t *edges,
                                  size_t edge_count,
                                  struct CwGraph **out);

// Parses a NUL-terminated graph in `adjlist` or `pairs` text format (the
// format is detected).
//
// # Safety
// `text` must be a valid C string and `out` must be writable.
enum CwStatus cw_graph_parse(const char *text, struct CwGraph **out);

// Releases a handle. Null is accepted.
//
// # Safety
// `g` must come from this library and not have been freed.
void cw_graph_free(struct CwGraph *g);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t cw_graph_order(const struct CwGraph *g);

// Number of edges, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t cw_graph_edge_count(const struct CwGraph *g);

// Input label of vertex `v` (for parsed graphs; `v + 1` otherwise).
//
// # Safety
// `g` must be a live handle and `out` writable.
enum CwStatus cw_graph_label(const struct CwGraph *g, size_t v, uint64_t *out);

// Writes the corner rank of every vertex into `out[0..n]`; infinite ranks
// are [`CW_INFINITE`]. `len` must be at least the order.
//
// # Safety
// `g` must be a live handle and `out` must hold `len` values.
enum CwStatus cw_corner_ranks(const struct CwGraph *g, uint32_t *out, size_t len);

// Corner rank of the graph (the largest vertex rank).
//
// # Safety
// `g` must be a live handle and `out` writable.
enum CwStatus cw_graph_rank(const struct CwGraph *g, uint32_t *out);

// Writes the rank cardinality vector. `*len` is set to its length; when
// `cap` is smaller the call returns `BufferTooSmall` and writes nothing else.
// Fails with `NotCopWin` for graphs of infinite rank.
//
// # Safety
// `g` must be a live handle, `out` must hold `cap` values (or be null with
// `cap == 0`) and `len` must be writable.
enum CwStatus cw_rank_vector(const struct CwGraph *g, uint32_t *out, size_t cap, size_t *len);

// Top class of a cop-win graph.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum CwStatus cw_top_class(const struct CwGraph *g, enum CwTop *out);

// Capture time read off the corner ranking; [`CW_INFINITE`] when the graph
// is robber-win.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum CwStatus cw_capture_time_rank(const struct CwGraph *g, uint32_t *out);

// Capture time from solving the game directly.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum CwStatus cw_capture_time_game(const struct CwGraph *g, uint32_t *out);

// Canonical form as a NUL-terminated compact string (`n:u-v,...`, 1-based);
// two graphs give the same string iff they are isomorphic. `*needed` gets
// the size including the terminator; with a short buffer the call returns
// `BufferTooSmall`.
//
// # Safety
// `g` must be a live handle, `buf` must hold `cap` bytes (or be null with
// `cap == 0`) and `needed` must be writable.
enum CwStatus cw_canonical_form(const struct CwGraph *g, char *buf, size_t cap, size_t *needed);

// Message for the last failing call on this thread, or null. The pointer is
// valid until the next failing call on the same thread.
const char *cw_last_error(void);

// Static description of a status code.
const char *cw_status_str(enum CwStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COPWIN_H */
