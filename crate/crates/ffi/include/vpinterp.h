#ifndef VPINTERP_H
#define VPINTERP_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum VpStatus {
  VP_STATUS_OK = 0,
  VP_STATUS_NULL_POINTER = 1,
  VP_STATUS_INVALID_KIND = 2,
  VP_STATUS_INVALID_ARGUMENT = 3,
  VP_STATUS_DOMAIN = 4,
  VP_STATUS_SHAPE = 5,
  VP_STATUS_NON_FINITE = 6,
  VP_STATUS_INADMISSIBLE = 7,
  VP_STATUS_PANIC = 8,
} VpStatus;

/**
 * Opaque interpolant handle.
 */
typedef struct VpHandle VpHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *vp_last_error_message(void);

/**
 * Builds the interpolant of degree pair `(n, m)` from `len == n` samples at
 * the nodes of `kind`. On success `*out` receives a handle to release with
 * [`vp_interpolant_free`].
 *
 * # Safety
 * `samples` must point to `len` readable doubles and `out` must be writable.
 */
enum VpStatus vp_interpolant_new(uint32_t kind,
                                 size_t n,
                                 size_t m,
                                 const double *samples,
                                 size_t len,
                                 struct VpHandle **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `handle` must come from [`vp_interpolant_new`] and not be used afterwards.
 */
void vp_interpolant_free(struct VpHandle *handle);

/**
 * Evaluates the interpolant at `len` points in `[-1, 1]`.
 *
 * # Safety
 * `points` and `values` must each hold `len` doubles.
 */
enum VpStatus vp_interpolant_evaluate(const struct VpHandle *handle,
                                      const double *points,
                                      double *values,
                                      size_t len);

/**
 * Evaluates the derivative of order `r >= 1` at `len` points.
 *
 * # Safety
 * `points` and `values` must each hold `len` doubles.
 */
enum VpStatus vp_interpolant_evaluate_deriv(const struct VpHandle *handle,
                                            size_t r,
                                            const double *points,
                                            double *values,
                                            size_t len);

/**
 * Writes the `n` node angles, abscissae and Christoffel numbers of `kind`.
 * Any of the three output pointers may be null to skip that array.
 *
 * # Safety
 * Each non-null output must hold `n` doubles.
 */
enum VpStatus vp_nodes(uint32_t kind, size_t n, double *t, double *x, double *lambda);

/**
 * Lebesgue constant of the `(n, m)` operator in the norm weighted by
 * `(1 - x)^gamma (1 + x)^delta`, scanned on `grid_size + 1` angles.
 *
 * # Safety
 * `out` must be writable.
 */
enum VpStatus vp_lebesgue_constant(uint32_t kind,
                                   size_t n,
                                   size_t m,
                                   double gamma,
                                   double delta,
                                   size_t grid_size,
                                   double *out);

/**
 * Closed-form upper bound for the Lebesgue constant.
 *
 * # Safety
 * `out` must be writable.
 */
enum VpStatus vp_lebesgue_bound(uint32_t kind, size_t n, size_t m, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VPINTERP_H */
