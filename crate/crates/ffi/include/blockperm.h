#ifndef BLOCKPERM_H
#define BLOCKPERM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of fallible calls.
 */
typedef enum BpStatus {
  BP_STATUS_OK = 0,
  BP_STATUS_NULL_POINTER = 1,
  BP_STATUS_INVALID_UTF8 = 2,
  BP_STATUS_PARSE_ERROR = 3,
  BP_STATUS_DOMAIN_ERROR = 4,
  BP_STATUS_SIZE_CAP = 5,
  BP_STATUS_INVALID_SHAPE = 6,
  BP_STATUS_INTERNAL = 7,
} BpStatus;

/**
 * Which family [`bp_count`] enumerates.
 */
typedef enum BpFamily {
  /**
   * Avoids `12...(k+2)`; the parameter is `k`.
   */
  BP_FAMILY_AVOIDING = 0,
  /**
   * Longest increasing subsequence exactly `h`; the parameter is `h`.
   */
  BP_FAMILY_LIS = 1,
} BpFamily;

/**
 * Opaque handle to an immutable block-ascending permutation.
 */
typedef struct BpPermutation BpPermutation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *bp_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void bp_string_free(char *s);

/**
 * # Safety
 * `perm` must be NULL or a handle returned by this library, not yet freed.
 */
void bp_perm_free(struct BpPermutation *perm);

/**
 * Parses `236|14578` or `2,3,6|1,4,5,7,8` into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BpStatus bp_perm_parse(const char *text, struct BpPermutation **out);

/**
 * Builds a handle from block lengths and values.
 *
 * # Safety
 * `parts` must hold `n_parts` values and `values` must hold `n_values`.
 */
enum BpStatus bp_perm_new(const size_t *parts_ptr,
                          size_t n_parts,
                          const uint32_t *values,
                          size_t n_values,
                          struct BpPermutation **out);

/**
 * Canonical text form; free with [`bp_string_free`].
 *
 * # Safety
 * `perm` must be a live handle; `out` must be writable.
 */
enum BpStatus bp_perm_to_string(const struct BpPermutation *perm, char **out);

/**
 * `{"comp":[...],"values":[...]}`; free with [`bp_string_free`].
 *
 * # Safety
 * `perm` must be a live handle; `out` must be writable.
 */
enum BpStatus bp_perm_to_json(const struct BpPermutation *perm, char **out);

/**
 * `N`, or 0 for a NULL handle.
 *
 * # Safety
 * `perm` must be NULL or a live handle.
 */
size_t bp_perm_size(const struct BpPermutation *perm);

/**
 * Number of blocks, or 0 for a NULL handle.
 *
 * # Safety
 * `perm` must be NULL or a live handle.
 */
size_t bp_perm_block_count(const struct BpPermutation *perm);

/**
 * Copies up to `cap` values into `out` and returns `N`.
 *
 * # Safety
 * `perm` must be a live handle and `out` must have room for `cap` values.
 */
size_t bp_perm_values(const struct BpPermutation *perm, uint32_t *out, size_t cap);

/**
 * Length of the longest increasing subsequence, or 0 for a NULL handle.
 *
 * # Safety
 * `perm` must be NULL or a live handle.
 */
size_t bp_perm_lis_length(const struct BpPermutation *perm);

/**
 * W on a two-block permutation.
 *
 * # Safety
 * `perm` must be a live handle; `out` must be writable.
 */
enum BpStatus bp_map_w(const struct BpPermutation *perm, struct BpPermutation **out);

/**
 * V on a two-block permutation.
 *
 * # Safety
 * `perm` must be a live handle; `out` must be writable.
 */
enum BpStatus bp_map_v(const struct BpPermutation *perm, struct BpPermutation **out);

/**
 * Exchanges the lengths of blocks `index` and `index + 1` (1-based).
 *
 * # Safety
 * `perm` must be a live handle; `out` must be writable.
 */
enum BpStatus bp_swap_adjacent(const struct BpPermutation *perm,
                               size_t index,
                               struct BpPermutation **out);

/**
 * One unit transfer from block `index + 1` into block `index` (1-based).
 *
 * # Safety
 * `perm` must be a live handle; `out` must be writable.
 */
enum BpStatus bp_transfer_step(const struct BpPermutation *perm,
                               size_t index,
                               struct BpPermutation **out);

/**
 * Rearranges the blocks into the target composition.
 *
 * # Safety
 * `perm` must be a live handle, `target` must hold `n_target` values and
 * `out` must be writable.
 */
enum BpStatus bp_reorder_blocks(const struct BpPermutation *perm,
                                const size_t *target,
                                size_t n_target,
                                struct BpPermutation **out);

/**
 * Injects into the target composition, which the input must majorize.
 *
 * # Safety
 * As for [`bp_reorder_blocks`].
 */
enum BpStatus bp_majorize_inject(const struct BpPermutation *perm,
                                 const size_t *target,
                                 size_t n_target,
                                 struct BpPermutation **out);

/**
 * Appends `N + 1` to a first block of length `k`.
 *
 * # Safety
 * `perm` must be a live handle; `out` must be writable.
 */
enum BpStatus bp_insert_max(const struct BpPermutation *perm, size_t k, struct BpPermutation **out);

/**
 * Removes the maximum from a first block of length `k + 1`.
 *
 * # Safety
 * `perm` must be a live handle; `out` must be writable.
 */
enum BpStatus bp_delete_max(const struct BpPermutation *perm, size_t k, struct BpPermutation **out);

/**
 * Brute-force cardinality of `L_{k+2}(parts)` or `D_h(parts)`.
 *
 * # Safety
 * `parts` must hold `n_parts` values; `out` must be writable.
 */
enum BpStatus bp_count(enum BpFamily family,
                       size_t param,
                       const size_t *parts_ptr,
                       size_t n_parts,
                       uint64_t *out);

/**
 * Catalan triangle entry `C(n, k)` as a decimal string.
 *
 * # Safety
 * `out` must be writable.
 */
enum BpStatus bp_catalan_triangle(uint64_t n, uint64_t k, char **out);

/**
 * Number of standard fillings of `outer / inner` as a decimal string.
 *
 * # Safety
 * `outer` and `inner` must hold `n_outer` and `n_inner` values; `out` must be writable.
 */
enum BpStatus bp_skew_count(const size_t *outer,
                            size_t n_outer,
                            const size_t *inner,
                            size_t n_inner,
                            char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BLOCKPERM_H */
