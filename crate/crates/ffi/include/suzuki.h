#ifndef SUZUKI_H
#define SUZUKI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every function.
 */
typedef enum SuzukiStatus {
  SUZUKI_STATUS_OK = 0,
  SUZUKI_STATUS_NULL_POINTER = 1,
  SUZUKI_STATUS_PARAMETER_DOMAIN = 2,
  SUZUKI_STATUS_RANGE = 3,
  SUZUKI_STATUS_PRECONDITION = 4,
  SUZUKI_STATUS_PARSE = 5,
  SUZUKI_STATUS_UNSUPPORTED = 6,
  SUZUKI_STATUS_INVALID_UTF8 = 7,
  SUZUKI_STATUS_DEFECT = 8,
  SUZUKI_STATUS_PANIC = 9,
} SuzukiStatus;

/**
 * Opaque per-curve state: semigroup table, reduction memo and, once needed,
 * the rational points.
 */
typedef struct SuzukiContext SuzukiContext;

/**
 * Derived curve parameters.
 */
typedef struct SuzukiParams {
  uint32_t n;
  uint64_t q0;
  uint64_t q;
  uint64_t genus;
  uint64_t m_embed;
  uint64_t generators[4];
} SuzukiParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a context for X_n. On success `*out_ctx` owns the handle.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum SuzukiStatus suzuki_context_new(uint32_t n, struct SuzukiContext **out_ctx);

/**
 * Releases a context. Null is ignored.
 *
 * # Safety
 * `ctx` must come from [`suzuki_context_new`] and not be used afterwards.
 */
void suzuki_context_free(struct SuzukiContext *ctx);

/**
 * # Safety
 * `ctx` must be a live context and `params` writable.
 */
enum SuzukiStatus suzuki_params(struct SuzukiContext *ctx, struct SuzukiParams *params);

/**
 * Dimension of L(m P_inf), counted from the Weierstrass semigroup.
 *
 * # Safety
 * `ctx` must be a live context and `dim` writable.
 */
enum SuzukiStatus suzuki_dim_l(struct SuzukiContext *ctx, uint64_t m, uint64_t *dim);

/**
 * Whether |m P_inf| is very ample.
 *
 * # Safety
 * `ctx` must be a live context and `result` writable.
 */
enum SuzukiStatus suzuki_is_very_ample(struct SuzukiContext *ctx, uint64_t m, bool *result);

/**
 * Dimension of degree-`t` forms vanishing on the curve, from the rank of
 * the reduction map over GF(2).
 *
 * # Safety
 * `ctx` must be a live context and `kappa` writable.
 */
enum SuzukiStatus suzuki_kappa_rank(struct SuzukiContext *ctx, uint64_t t, uint64_t *kappa);

/**
 * Same count as [`suzuki_kappa_rank`], from evaluation at rational points.
 *
 * # Safety
 * `ctx` must be a live context and `kappa` writable.
 */
enum SuzukiStatus suzuki_kappa_eval(struct SuzukiContext *ctx, uint64_t t, uint64_t *kappa);

/**
 * Reduces a polynomial in x, y, v, w to normal form. `*result` receives a
 * NUL-terminated string to be released with [`suzuki_string_free`].
 *
 * # Safety
 * `ctx` must be a live context, `expr` a NUL-terminated string and `result`
 * writable.
 */
enum SuzukiStatus suzuki_reduce(struct SuzukiContext *ctx, const char *expr, char **result);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void suzuki_string_free(char *s);

/**
 * Message for the most recent failure on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *suzuki_last_error(void);

/**
 * Static name of a status code.
 */
const char *suzuki_status_name(enum SuzukiStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUZUKI_H */
