#ifndef INVCURVE_H
#define INVCURVE_H

/* This file is generated by cbindgen from the invcurve-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Group selector.
typedef enum InvGroup {
  INV_GROUP_VALENTINER = 0,
  INV_GROUP_ICOSAHEDRAL = 1,
  INV_GROUP_KLEIN = 2,
} InvGroup;

// Status codes returned by every fallible call.
typedef enum InvStatus {
  INV_STATUS_OK = 0,
  INV_STATUS_NULL_ARGUMENT = 1,
  INV_STATUS_INVALID_ARGUMENT = 2,
  INV_STATUS_BUFFER_TOO_SMALL = 3,
  INV_STATUS_INTERNAL = 4,
} InvStatus;

// Singularity classification of a general invariant curve.
typedef enum InvSingularity {
  INV_SINGULARITY_NODE = 0,
  INV_SINGULARITY_CUSP = 1,
  INV_SINGULARITY_TACNODE = 2,
  INV_SINGULARITY_A5 = 3,
  INV_SINGULARITY_D5 = 4,
  INV_SINGULARITY_NONSINGULAR = 5,
  INV_SINGULARITY_UNDEFINED = 6,
} InvSingularity;

// Opaque handle owning one group's cached data.
typedef struct InvCurveCtx InvCurveCtx;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create a context for one group. Free with `invcurve_ctx_free`.
struct InvCurveCtx *invcurve_ctx_new(enum InvGroup group);

// Release a context created by `invcurve_ctx_new`.
//
// # Safety
// `ctx` must be a pointer previously returned by `invcurve_ctx_new` and
// not freed since; null is ignored.
void invcurve_ctx_free(struct InvCurveCtx *ctx);

// Order of the linear lift generated by the generator matrices
// (1080, 60 or 168).
//
// # Safety
// `ctx` must be a live context pointer and `out` writable.
enum InvStatus invcurve_lift_order(const struct InvCurveCtx *ctx, uint64_t *out);

// Order of the group in PGL(3, C) (360, 60 or 168).
//
// # Safety
// `ctx` must be a live context pointer and `out` writable.
enum InvStatus invcurve_projective_order(const struct InvCurveCtx *ctx, uint64_t *out);

// Does a nonsingular invariant curve of this degree exist?
// Writes 1 or 0 to `out`.
//
// # Safety
// `ctx` must be a live context pointer and `out` writable.
enum InvStatus invcurve_nonsingular_exists(const struct InvCurveCtx *ctx,
                                           uint32_t degree,
                                           int32_t *out);

// Does an integral (irreducible, reduced) invariant curve of this degree
// exist? Writes 1 or 0 to `out`.
//
// # Safety
// `ctx` must be a live context pointer and `out` writable.
enum InvStatus invcurve_integral_exists(const struct InvCurveCtx *ctx,
                                        uint32_t degree,
                                        int32_t *out);

// Singularity type of a general invariant curve of this degree, with the
// branch multiplicity (0 when the type carries none) and the number of
// singular points (0 when the general member is nonsingular/undefined).
// Output pointers may be null to skip a field.
//
// # Safety
// `ctx` must be a live context pointer; non-null outputs writable.
enum InvStatus invcurve_classify(const struct InvCurveCtx *ctx,
                                 uint32_t degree,
                                 enum InvSingularity *out_type,
                                 uint32_t *out_multiplicity,
                                 uint32_t *out_point_count);

// Exact Molien coefficients of the lift's invariant ring, t⁰..t^max.
// `out` must hold at least `max_degree + 1` entries.
//
// # Safety
// `ctx` must be a live context pointer; `out` must point to writable
// memory of `out_len` elements.
enum InvStatus invcurve_molien(const struct InvCurveCtx *ctx,
                               uint32_t max_degree,
                               int64_t *out,
                               uintptr_t out_len);

// Closed-form series expansion (same coefficients as `invcurve_molien`,
// no group enumeration).
//
// # Safety
// `out` must point to writable memory of `out_len` elements.
enum InvStatus invcurve_poincare(enum InvGroup group,
                                 uint32_t max_degree,
                                 int64_t *out,
                                 uintptr_t out_len);

// Library version as a static NUL-terminated string.
const char *invcurve_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INVCURVE_H */
