#ifndef POLYTANGENT_H
#define POLYTANGENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PtOrientation {
  PT_ORIENTATION_COUNTER_CLOCKWISE = 1,
  PT_ORIENTATION_CLOCKWISE = -1,
} PtOrientation;

typedef enum PtStatus {
  PT_STATUS_OK = 0,
  PT_STATUS_NULL_POINTER = 1,
  PT_STATUS_TOO_FEW_CORNERS = 2,
  PT_STATUS_COORDINATE_OUT_OF_RANGE = 3,
  PT_STATUS_DUPLICATE_CORNER = 4,
  PT_STATUS_ZERO_AREA = 5,
  PT_STATUS_NOT_SEPARABLE = 6,
  PT_STATUS_PRECONDITION_UNCERTAIN = 7,
  PT_STATUS_INTERNAL = 99,
} PtStatus;

typedef enum PtUncertainty {
  PT_UNCERTAINTY_NONE = 0,
  PT_UNCERTAINTY_HULLS_INTERSECT = 1,
  PT_UNCERTAINTY_SIDE_CHECK_FAILED = 2,
} PtUncertainty;

/**
 * Opaque owned polygon.
 */
typedef struct PtPolygon PtPolygon;

typedef struct PtRunStats {
  uint64_t iterations;
  uint64_t corner_reads;
  uint64_t updates;
  uint64_t degenerate_tests;
} PtRunStats;

/**
 * Result of a tangent query.
 *
 * `s0` and `s1` are set for [`PtStatus::Ok`] and, as the loop's final
 * pivots, for [`PtStatus::PreconditionUncertain`]. `precheck` holds the
 * counters of the hull check that precedes the outer tangent loop and is
 * zero for separating tangents.
 */
typedef struct PtTangent {
  size_t s0;
  size_t s1;
  struct PtRunStats stats;
  struct PtRunStats precheck;
  enum PtUncertainty uncertainty;
} PtTangent;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Human-readable description of a status code, as a static NUL-terminated
 * string. Unknown codes map to "unknown status".
 */
const char *pt_status_message(int32_t status);

/**
 * Library version as a static NUL-terminated string.
 */
const char *pt_version(void);

/**
 * Creates a polygon from `n` interleaved coordinates `x0, y0, x1, y1, ...`.
 *
 * # Safety
 * `xy` must point to `2 * n` readable `int64_t` values and `out` must be a
 * valid pointer to writable storage for one handle.
 */
enum PtStatus pt_polygon_new(const int64_t *xy, size_t n, struct PtPolygon **out);

/**
 * Releases a handle. Passing NULL is a no-op.
 *
 * # Safety
 * `poly` must be NULL or a handle from [`pt_polygon_new`] or
 * [`pt_polygon_reversed`] that has not been freed.
 */
void pt_polygon_free(struct PtPolygon *poly);

/**
 * Number of corners, or 0 for NULL.
 *
 * # Safety
 * `poly` must be NULL or a live handle.
 */
size_t pt_polygon_len(const struct PtPolygon *poly);

/**
 * Writes the orientation of `poly` to `out`.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum PtStatus pt_polygon_orientation(const struct PtPolygon *poly, enum PtOrientation *out);

/**
 * Writes corner `i` (taken modulo the length) to `x` and `y`.
 *
 * # Safety
 * `poly` must be a live handle; `x` and `y` must be valid pointers.
 */
enum PtStatus pt_polygon_corner(const struct PtPolygon *poly, size_t i, int64_t *x, int64_t *y);

/**
 * Creates a new handle holding the corners of `poly` in reverse order.
 *
 * # Safety
 * `poly` must be a live handle and `out` a valid pointer.
 */
enum PtStatus pt_polygon_reversed(const struct PtPolygon *poly, struct PtPolygon **out);

/**
 * Separating common tangent. Returns [`PtStatus::NotSeparable`] exactly
 * when the convex hulls intersect.
 *
 * # Safety
 * `p0` and `p1` must be live handles and `out` a valid pointer.
 */
enum PtStatus pt_separating_tangent(const struct PtPolygon *p0,
                                    const struct PtPolygon *p1,
                                    struct PtTangent *out);

/**
 * The other separating common tangent.
 *
 * # Safety
 * `p0` and `p1` must be live handles and `out` a valid pointer.
 */
enum PtStatus pt_second_separating_tangent(const struct PtPolygon *p0,
                                           const struct PtPolygon *p1,
                                           struct PtTangent *out);

/**
 * Outer common tangent. Returns [`PtStatus::PreconditionUncertain`] when
 * the hulls intersect or the result fails the side check.
 *
 * # Safety
 * `p0` and `p1` must be live handles and `out` a valid pointer.
 */
enum PtStatus pt_outer_tangent(const struct PtPolygon *p0,
                               const struct PtPolygon *p1,
                               struct PtTangent *out);

/**
 * The other outer common tangent.
 *
 * # Safety
 * `p0` and `p1` must be live handles and `out` a valid pointer.
 */
enum PtStatus pt_second_outer_tangent(const struct PtPolygon *p0,
                                      const struct PtPolygon *p1,
                                      struct PtTangent *out);

/**
 * Writes whether the convex hulls of the polygons are disjoint.
 *
 * # Safety
 * `p0` and `p1` must be live handles and `out` a valid pointer.
 */
enum PtStatus pt_hulls_disjoint(const struct PtPolygon *p0, const struct PtPolygon *p1, bool *out);

/**
 * Exact orientation of `c` relative to the directed line `a -> b`:
 * `1` left, `-1` right, `0` collinear.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PtStatus pt_orient(int64_t ax,
                        int64_t ay,
                        int64_t bx,
                        int64_t by,
                        int64_t cx,
                        int64_t cy,
                        int32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYTANGENT_H */
