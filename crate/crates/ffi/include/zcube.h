#ifndef ZCUBE_H
#define ZCUBE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Values for the `kind` argument. Functions take `kind` as a plain
// integer so that out-of-range values are reported, not undefined.
typedef enum ZcubeFamilyKind {
  ZCUBE_FAMILY_KIND_H = 0,
  ZCUBE_FAMILY_KIND_Q = 1,
  // Uses the accompanying `k` argument.
  ZCUBE_FAMILY_KIND_Z = 2,
} ZcubeFamilyKind;

// Result codes.
typedef enum ZcubeStatus {
  ZCUBE_STATUS_OK = 0,
  ZCUBE_STATUS_NULL_POINTER = 1,
  ZCUBE_STATUS_INVALID_ARGUMENT = 2,
  ZCUBE_STATUS_PARSE = 3,
  ZCUBE_STATUS_LENGTH_MISMATCH = 4,
  ZCUBE_STATUS_OUT_OF_RANGE = 5,
  ZCUBE_STATUS_UNSUPPORTED = 6,
  ZCUBE_STATUS_CAP_EXCEEDED = 7,
  ZCUBE_STATUS_BUFFER_TOO_SMALL = 8,
  ZCUBE_STATUS_PANIC = 9,
} ZcubeStatus;

// Opaque graph handle.
typedef struct ZcubeGraph ZcubeGraph;

// Opaque walk handle.
typedef struct ZcubeWalk ZcubeWalk;

// Bounds for one `n`. `zstar` is meaningful only when `has_zstar`.
typedef struct ZcubeBounds {
  uint32_t kappa;
  uint64_t lower;
  double sigma;
  double thm1;
  double zstar;
  bool has_zstar;
} ZcubeBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates the `n`-dimensional member of a family (`1 <= n <= 40`).
//
// # Safety
// `out` must be valid for writes.
enum ZcubeStatus zcube_graph_new(uint32_t kind, uint32_t k, uint32_t n, struct ZcubeGraph **out);

// # Safety
// `g` must be null or a handle from [`zcube_graph_new`] not yet freed.
void zcube_graph_free(struct ZcubeGraph *g);

// # Safety
// `g` must be a live handle; `out` valid for writes.
enum ZcubeStatus zcube_graph_dim(const struct ZcubeGraph *g, uint32_t *out);

// Neighbor of vertex `v` at `level` (1-based).
//
// # Safety
// `g` must be a live handle; `out` valid for writes.
enum ZcubeStatus zcube_graph_neighbor(const struct ZcubeGraph *g,
                                      uint64_t v,
                                      uint32_t level,
                                      uint64_t *out);

// # Safety
// `g` must be a live handle; `out` valid for writes.
enum ZcubeStatus zcube_graph_adjacent(const struct ZcubeGraph *g,
                                      uint64_t u,
                                      uint64_t v,
                                      bool *out);

// Exact diameter; refused above the exact cap (14 unless
// `ZCUBE_MAX_EXACT_N` says otherwise).
//
// # Safety
// `g` must be a live handle; `out` valid for writes.
enum ZcubeStatus zcube_graph_diameter(const struct ZcubeGraph *g, uint32_t *out);

// Routes between two vertices given as text, with any `n`.
//
// # Safety
// `from` and `to` must be NUL-terminated strings; `out` valid for writes.
enum ZcubeStatus zcube_route(uint32_t kind,
                             uint32_t k,
                             const char *from,
                             const char *to,
                             bool compact,
                             struct ZcubeWalk **out);

// Hamiltonian path of `H_n`, `3 <= n <= 24`.
//
// # Safety
// `from` and `to` must be NUL-terminated strings; `out` valid for writes.
enum ZcubeStatus zcube_hamiltonian_path(const char *from, const char *to, struct ZcubeWalk **out);

// Number of vertices in the walk (edges + 1); 0 for a null handle.
//
// # Safety
// `w` must be null or a live walk handle.
size_t zcube_walk_count(const struct ZcubeWalk *w);

// Copies vertex `i` as NUL-terminated text into `buf` (`n + 1` bytes).
//
// # Safety
// `w` must be a live walk handle; `buf` valid for `buf_len` bytes.
enum ZcubeStatus zcube_walk_vertex(const struct ZcubeWalk *w, size_t i, char *buf, size_t buf_len);

// # Safety
// `w` must be null or a walk handle not yet freed.
void zcube_walk_free(struct ZcubeWalk *w);

// # Safety
// `out` must be valid for writes.
enum ZcubeStatus zcube_kappa(uint64_t n, uint32_t *out);

// # Safety
// `out` must be valid for writes.
enum ZcubeStatus zcube_bounds(uint64_t n, struct ZcubeBounds *out);

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *zcube_last_error(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ZCUBE_H */
