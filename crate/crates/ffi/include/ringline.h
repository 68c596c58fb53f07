#ifndef RINGLINE_H
#define RINGLINE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum RlStatus {
  RL_STATUS_OK = 0,
  RL_STATUS_NULL_POINTER = 1,
  RL_STATUS_INVALID_UTF8 = 2,
  RL_STATUS_PARSE = 3,
  RL_STATUS_RING = 4,
  RL_STATUS_IDEAL = 5,
  RL_STATUS_LINE = 6,
  RL_STATUS_PROFILE = 7,
  RL_STATUS_OUT_OF_RANGE = 8,
  RL_STATUS_PANIC = 9,
} RlStatus;

/**
 * Opaque projective line.
 */
typedef struct RlLine RlLine;

/**
 * Opaque finite ring.
 */
typedef struct RlRing RlRing;

/**
 * Classification profile of a line.
 */
typedef struct RlProfile {
  /**
   * Ring order (`A` of the type label `A/B`).
   */
  uint64_t order;
  /**
   * Zero-divisors of the ring (`B`).
   */
  uint64_t zero_divisors;
  uint64_t tot;
  uint64_t tp_i;
  uint64_t one_n;
  uint64_t cap2n;
  uint64_t cap3n;
  uint64_t jcb;
  uint64_t md;
} RlProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *rl_last_error(void);

/**
 * Parses and builds the ring described by `expr`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RlStatus rl_ring_new(const char *expr, struct RlRing **out);

/**
 * # Safety
 * `ring` must come from `rl_ring_new` and not be used afterwards.
 */
void rl_ring_free(struct RlRing *ring);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `ring` must be null or a live handle.
 */
size_t rl_ring_order(const struct RlRing *ring);

/**
 * # Safety
 * `ring` must be null or a live handle.
 */
size_t rl_ring_zero_divisor_count(const struct RlRing *ring);

/**
 * Index of the multiplicative identity.
 *
 * # Safety
 * `ring` must be null or a live handle.
 */
size_t rl_ring_one(const struct RlRing *ring);

/**
 * `*out = a + b`
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_ring_add(const struct RlRing *ring, size_t a, size_t b, size_t *out);

/**
 * `*out = a * b`
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_ring_mul(const struct RlRing *ring, size_t a, size_t b, size_t *out);

/**
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_ring_is_unit(const struct RlRing *ring, size_t a, bool *out);

/**
 * Enumerates the projective line over a copy of `ring`.
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_line_new(const struct RlRing *ring, struct RlLine **out);

/**
 * # Safety
 * `line` must come from `rl_line_new` and not be used afterwards.
 */
void rl_line_free(struct RlLine *line);

/**
 * Number of points, or 0 for a null handle.
 *
 * # Safety
 * `line` must be null or a live handle.
 */
size_t rl_line_point_count(const struct RlLine *line);

/**
 * Whether points `a` and `b` are distant.
 *
 * # Safety
 * `line` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_line_is_distant(const struct RlLine *line, size_t a, size_t b, bool *out);

/**
 * Writes the canonical label of point `index`, e.g. `(1,[0,2])`, as a newly
 * allocated string to be released with `rl_string_free`.
 *
 * # Safety
 * `line` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_line_point_label(const struct RlLine *line, size_t index, char **out);

/**
 * # Safety
 * `line` must be a live handle and `out` a valid pointer.
 */
enum RlStatus rl_line_profile(const struct RlLine *line, struct RlProfile *out);

/**
 * Parse, build, enumerate and profile in one call.
 *
 * # Safety
 * `expr` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RlStatus rl_profile(const char *expr, struct RlProfile *out);

/**
 * Canonical text of a ring expression, newly allocated; release with
 * `rl_string_free`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RlStatus rl_canonical(const char *expr, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void rl_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RINGLINE_H */
