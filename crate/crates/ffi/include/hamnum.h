#ifndef HAMNUM_H
#define HAMNUM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes; one per library error plus the ABI's own failures.
 */
typedef enum HnStatus {
  HN_STATUS_OK = 0,
  HN_STATUS_NULL_POINTER,
  HN_STATUS_INVALID_UTF8,
  HN_STATUS_BUFFER_TOO_SMALL,
  HN_STATUS_PANIC,
  HN_STATUS_SYNTAX_ERROR,
  HN_STATUS_DANGLING_DART,
  HN_STATUS_DISCONNECTED,
  HN_STATUS_NON_PLANAR_EMBEDDING,
  HN_STATUS_LOOP_EDGE,
  HN_STATUS_TOO_FEW_FACES,
  HN_STATUS_INVALID_FACE_LENGTH,
  HN_STATUS_ODD_GRINBERG_NUMBER,
  HN_STATUS_NON_ADJACENT_STEP,
  HN_STATUS_NOT_SPANNING,
  HN_STATUS_UNKNOWN_VERTEX,
  HN_STATUS_EMPTY_WALK,
  HN_STATUS_TOO_LARGE,
  HN_STATUS_NOT_SIMPLE_HOST,
  HN_STATUS_INVALID_WALK,
  HN_STATUS_ODD_DUAL_CYCLE,
  HN_STATUS_INCONSISTENT_BOUNDS,
  HN_STATUS_UNKNOWN_FIXTURE,
  HN_STATUS_BAD_PARAMS,
  HN_STATUS_UNKNOWN_FACE,
  HN_STATUS_THEOREM_VIOLATED,
  HN_STATUS_IO,
} HnStatus;

/**
 * Parsed, validated planar embedding.
 */
typedef struct HnEmbedding HnEmbedding;

/**
 * Grinberg set of a face-length vector.
 */
typedef struct HnGrinbergSet HnGrinbergSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread; empty after success.
 * Owned by the library and valid until the next call on this thread.
 */
const char *hn_last_error_message(void);

/**
 * Parses a graph file (`p planar`, `e` and `r` lines).
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a writable pointer.
 */
enum HnStatus hn_embedding_parse(const char *text, struct HnEmbedding **out);

/**
 * # Safety
 * `g` must come from [`hn_embedding_parse`] and not be used afterwards.
 */
void hn_embedding_free(struct HnEmbedding *g);

/**
 * Vertex, edge and face counts.
 *
 * # Safety
 * `g` must be a live handle; the out pointers must be writable.
 */
enum HnStatus hn_embedding_counts(const struct HnEmbedding *g,
                                  size_t *vertices,
                                  size_t *edges,
                                  size_t *faces);

/**
 * Face lengths in face-id order.
 *
 * # Safety
 * `g` must be a live handle, `buffer` must hold `capacity` values and `len`
 * must be writable.
 */
enum HnStatus hn_embedding_face_lengths(const struct HnEmbedding *g,
                                        uint32_t *buffer,
                                        size_t capacity,
                                        size_t *len);

/**
 * Grinberg set of a literal face-length vector.
 *
 * # Safety
 * `lengths` must hold `count` values and `out` must be writable.
 */
enum HnStatus hn_grinberg_from_lengths(const uint32_t *lengths,
                                       size_t count,
                                       struct HnGrinbergSet **out);

/**
 * Grinberg set of the embedding's traced faces.
 *
 * # Safety
 * `g` must be a live handle and `out` must be writable.
 */
enum HnStatus hn_grinberg_from_embedding(const struct HnEmbedding *g, struct HnGrinbergSet **out);

/**
 * Set elements in ascending order.
 *
 * # Safety
 * `set` must be a live handle, `buffer` must hold `capacity` values and
 * `len` must be writable.
 */
enum HnStatus hn_grinberg_set_values(const struct HnGrinbergSet *set,
                                     uint64_t *buffer,
                                     size_t capacity,
                                     size_t *len);

/**
 * Smallest element of the set.
 *
 * # Safety
 * `set` must be a live handle and `out` must be writable.
 */
enum HnStatus hn_grinberg_number(const struct HnGrinbergSet *set, uint64_t *out);

/**
 * # Safety
 * `set` must come from an `hn_grinberg_from_*` call and not be used afterwards.
 */
void hn_grinberg_set_free(struct HnGrinbergSet *set);

/**
 * `n + g/2`, computed on the doubled graph when the embedding has bridges.
 *
 * # Safety
 * `g` must be a live handle and `out` must be writable.
 */
enum HnStatus hn_hamiltonian_lower_bound(const struct HnEmbedding *g, uint64_t *out);

/**
 * Exact Hamiltonian number; fails with `TooLarge` above `limit` vertices.
 *
 * # Safety
 * `g` must be a live handle and `out` must be writable.
 */
enum HnStatus hn_hamiltonian_number(const struct HnEmbedding *g, size_t limit, uint64_t *out);

/**
 * Reduction report of a closed walk (vertex ids, closure implicit) as JSON.
 * The string is released with [`hn_string_free`].
 *
 * # Safety
 * `g` must be a live handle, `walk` must hold `count` vertex ids and `out`
 * must be writable.
 */
enum HnStatus hn_reduction_report_json(const struct HnEmbedding *g,
                                       const size_t *walk,
                                       size_t count,
                                       char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hn_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HAMNUM_H */
