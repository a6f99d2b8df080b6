//! C interface to polytangent.
//!
//! Polygons live behind opaque [`PtPolygon`] handles created by
//! [`pt_polygon_new`] and released by [`pt_polygon_free`]. Every call
//! returns a [`PtStatus`]; results are written through out-pointers only
//! when the status says so. Panics never cross the boundary and surface as
//! [`PtStatus::Internal`].
//!
//! The tangent functions accept polygons in either orientation. Corner
//! indices in results always refer to the corner order the handle was
//! created with.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use polytangent::polygon::{Oriented, PolygonError};
use polytangent::tangents::{self, TangentKind, Uncertainty, Variant};
use polytangent::{Orientation, OuterTangent, Point, Polygon, PolygonView, RunStats, Separation};

/// Opaque owned polygon.
pub struct PtPolygon {
    inner: Polygon,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtStatus {
    Ok = 0,
    NullPointer = 1,
    TooFewCorners = 2,
    CoordinateOutOfRange = 3,
    DuplicateCorner = 4,
    ZeroArea = 5,
    NotSeparable = 6,
    PreconditionUncertain = 7,
    Internal = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtOrientation {
    CounterClockwise = 1,
    Clockwise = -1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtUncertainty {
    None = 0,
    HullsIntersect = 1,
    SideCheckFailed = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PtRunStats {
    pub iterations: u64,
    pub corner_reads: u64,
    pub updates: u64,
    pub degenerate_tests: u64,
}

/// Result of a tangent query.
///
/// `s0` and `s1` are set for [`PtStatus::Ok`] and, as the loop's final
/// pivots, for [`PtStatus::PreconditionUncertain`]. `precheck` holds the
/// counters of the hull check that precedes the outer tangent loop and is
/// zero for separating tangents.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PtTangent {
    pub s0: usize,
    pub s1: usize,
    pub stats: PtRunStats,
    pub precheck: PtRunStats,
    pub uncertainty: PtUncertainty,
}

impl From<RunStats> for PtRunStats {
    fn from(s: RunStats) -> Self {
        PtRunStats {
            iterations: s.iterations,
            corner_reads: s.corner_reads,
            updates: s.updates,
            degenerate_tests: s.degenerate_tests,
        }
    }
}

impl From<Orientation> for PtOrientation {
    fn from(o: Orientation) -> Self {
        match o {
            Orientation::CounterClockwise => PtOrientation::CounterClockwise,
            Orientation::Clockwise => PtOrientation::Clockwise,
        }
    }
}

fn guard(f: impl FnOnce() -> PtStatus) -> PtStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(PtStatus::Internal)
}

fn polygon_status(e: &PolygonError) -> PtStatus {
    match e {
        PolygonError::TooFewCorners(_) => PtStatus::TooFewCorners,
        PolygonError::DuplicateConsecutive(..) => PtStatus::DuplicateCorner,
        PolygonError::ZeroArea => PtStatus::ZeroArea,
        PolygonError::OrientationMismatch { .. } => PtStatus::Internal,
    }
}

/// Human-readable description of a status code, as a static NUL-terminated
/// string. Unknown codes map to "unknown status".
#[no_mangle]
pub extern "C" fn pt_status_message(status: i32) -> *const c_char {
    let s: &'static [u8] = match status {
        0 => b"ok\0",
        1 => b"null pointer argument\0",
        2 => b"a polygon needs at least 3 corners\0",
        3 => b"coordinate exceeds the bound |c| <= 2^30\0",
        4 => b"consecutive corners coincide\0",
        5 => b"polygon has zero signed area\0",
        6 => b"hulls not disjoint\0",
        7 => b"precondition uncertain\0",
        99 => b"internal error\0",
        _ => b"unknown status\0",
    };
    s.as_ptr().cast()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates a polygon from `n` interleaved coordinates `x0, y0, x1, y1, ...`.
///
/// # Safety
/// `xy` must point to `2 * n` readable `int64_t` values and `out` must be a
/// valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn pt_polygon_new(xy: *const i64, n: usize, out: *mut *mut PtPolygon) -> PtStatus {
    guard(|| {
        if xy.is_null() || out.is_null() {
            return PtStatus::NullPointer;
        }
        let Some(len) = n.checked_mul(2) else {
            return PtStatus::TooFewCorners;
        };
        let coords = std::slice::from_raw_parts(xy, len);
        let mut corners = Vec::with_capacity(n);
        for c in coords.chunks_exact(2) {
            match Point::new(c[0], c[1]) {
                Ok(p) => corners.push(p),
                Err(_) => return PtStatus::CoordinateOutOfRange,
            }
        }
        match Polygon::new(corners) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(PtPolygon { inner }));
                PtStatus::Ok
            }
            Err(e) => polygon_status(&e),
        }
    })
}

/// Releases a handle. Passing NULL is a no-op.
///
/// # Safety
/// `poly` must be NULL or a handle from [`pt_polygon_new`] or
/// [`pt_polygon_reversed`] that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pt_polygon_free(poly: *mut PtPolygon) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Number of corners, or 0 for NULL.
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_polygon_len(poly: *const PtPolygon) -> usize {
    poly.as_ref().map_or(0, |p| p.inner.len())
}

/// Writes the orientation of `poly` to `out`.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_polygon_orientation(poly: *const PtPolygon, out: *mut PtOrientation) -> PtStatus {
    guard(|| match (poly.as_ref(), out.as_mut()) {
        (Some(p), Some(o)) => {
            *o = p.inner.orientation().into();
            PtStatus::Ok
        }
        _ => PtStatus::NullPointer,
    })
}

/// Writes corner `i` (taken modulo the length) to `x` and `y`.
///
/// # Safety
/// `poly` must be a live handle; `x` and `y` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pt_polygon_corner(poly: *const PtPolygon, i: usize, x: *mut i64, y: *mut i64) -> PtStatus {
    guard(|| match (poly.as_ref(), x.as_mut(), y.as_mut()) {
        (Some(p), Some(x), Some(y)) => {
            let c = p.inner.corner(i);
            *x = c.x();
            *y = c.y();
            PtStatus::Ok
        }
        _ => PtStatus::NullPointer,
    })
}

/// Creates a new handle holding the corners of `poly` in reverse order.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_polygon_reversed(poly: *const PtPolygon, out: *mut *mut PtPolygon) -> PtStatus {
    guard(|| match (poly.as_ref(), out.is_null()) {
        (Some(p), false) => {
            *out = Box::into_raw(Box::new(PtPolygon { inner: p.inner.to_reversed() }));
            PtStatus::Ok
        }
        _ => PtStatus::NullPointer,
    })
}

fn tangent(p0: &Polygon, p1: &Polygon, variant: Variant, out: &mut PtTangent) -> PtStatus {
    let want1 = match variant.kind() {
        TangentKind::Separating => Orientation::CounterClockwise,
        TangentKind::Outer => Orientation::Clockwise,
    };
    let a = Oriented::new(p0, Orientation::CounterClockwise);
    let b = Oriented::new(p1, want1);
    *out = PtTangent {
        s0: 0,
        s1: 0,
        stats: PtRunStats::default(),
        precheck: PtRunStats::default(),
        uncertainty: PtUncertainty::None,
    };
    let separation = |r: Result<Separation, tangents::TangentError>, out: &mut PtTangent| match r {
        Ok(Separation::Tangent(t)) => {
            out.s0 = a.original_index(t.s0);
            out.s1 = b.original_index(t.s1);
            out.stats = t.stats.into();
            PtStatus::Ok
        }
        Ok(Separation::NotSeparable(stats)) => {
            out.stats = stats.into();
            PtStatus::NotSeparable
        }
        Err(_) => PtStatus::Internal,
    };
    let outer = |r: Result<OuterTangent, tangents::TangentError>, out: &mut PtTangent| match r {
        Ok(OuterTangent::Tangent(t)) => {
            out.s0 = a.original_index(t.s0);
            out.s1 = b.original_index(t.s1);
            out.stats = t.stats.into();
            out.precheck = t.precheck.unwrap_or_default().into();
            PtStatus::Ok
        }
        Ok(OuterTangent::PreconditionUncertain { s0, s1, stats, precheck, reason }) => {
            out.s0 = a.original_index(s0);
            out.s1 = b.original_index(s1);
            out.stats = stats.into();
            out.precheck = precheck.into();
            out.uncertainty = match reason {
                Uncertainty::HullsIntersect => PtUncertainty::HullsIntersect,
                Uncertainty::SideCheckFailed => PtUncertainty::SideCheckFailed,
            };
            PtStatus::PreconditionUncertain
        }
        Err(_) => PtStatus::Internal,
    };
    match variant {
        Variant::Separating => separation(tangents::separating_common_tangent(&a, &b), out),
        Variant::SecondSeparating => separation(tangents::second_separating_tangent(&a, &b), out),
        Variant::Outer => outer(tangents::outer_common_tangent(&a, &b), out),
        Variant::SecondOuter => outer(tangents::second_outer_tangent(&a, &b), out),
    }
}

unsafe fn tangent_entry(p0: *const PtPolygon, p1: *const PtPolygon, out: *mut PtTangent, variant: Variant) -> PtStatus {
    guard(|| match (p0.as_ref(), p1.as_ref(), out.as_mut()) {
        (Some(p0), Some(p1), Some(out)) => tangent(&p0.inner, &p1.inner, variant, out),
        _ => PtStatus::NullPointer,
    })
}

/// Separating common tangent. Returns [`PtStatus::NotSeparable`] exactly
/// when the convex hulls intersect.
///
/// # Safety
/// `p0` and `p1` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_separating_tangent(
    p0: *const PtPolygon,
    p1: *const PtPolygon,
    out: *mut PtTangent,
) -> PtStatus {
    tangent_entry(p0, p1, out, Variant::Separating)
}

/// The other separating common tangent.
///
/// # Safety
/// `p0` and `p1` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_second_separating_tangent(
    p0: *const PtPolygon,
    p1: *const PtPolygon,
    out: *mut PtTangent,
) -> PtStatus {
    tangent_entry(p0, p1, out, Variant::SecondSeparating)
}

/// Outer common tangent. Returns [`PtStatus::PreconditionUncertain`] when
/// the hulls intersect or the result fails the side check.
///
/// # Safety
/// `p0` and `p1` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_outer_tangent(p0: *const PtPolygon, p1: *const PtPolygon, out: *mut PtTangent) -> PtStatus {
    tangent_entry(p0, p1, out, Variant::Outer)
}

/// The other outer common tangent.
///
/// # Safety
/// `p0` and `p1` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_second_outer_tangent(
    p0: *const PtPolygon,
    p1: *const PtPolygon,
    out: *mut PtTangent,
) -> PtStatus {
    tangent_entry(p0, p1, out, Variant::SecondOuter)
}

/// Writes whether the convex hulls of the polygons are disjoint.
///
/// # Safety
/// `p0` and `p1` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_hulls_disjoint(p0: *const PtPolygon, p1: *const PtPolygon, out: *mut bool) -> PtStatus {
    guard(|| match (p0.as_ref(), p1.as_ref(), out.as_mut()) {
        (Some(p0), Some(p1), Some(out)) => {
            let a = Oriented::new(&p0.inner, Orientation::CounterClockwise);
            let b = Oriented::new(&p1.inner, Orientation::CounterClockwise);
            *out = tangents::hulls_disjoint(&a, &b);
            PtStatus::Ok
        }
        _ => PtStatus::NullPointer,
    })
}

/// Exact orientation of `c` relative to the directed line `a -> b`:
/// `1` left, `-1` right, `0` collinear.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pt_orient(ax: i64, ay: i64, bx: i64, by: i64, cx: i64, cy: i64, out: *mut i32) -> PtStatus {
    guard(|| {
        let Some(out) = out.as_mut() else {
            return PtStatus::NullPointer;
        };
        match (Point::new(ax, ay), Point::new(bx, by), Point::new(cx, cy)) {
            (Ok(a), Ok(b), Ok(c)) => {
                *out = i32::from(polytangent::orient(a, b, c).as_i8());
                PtStatus::Ok
            }
            _ => PtStatus::CoordinateOutOfRange,
        }
    })
}

#[cfg(test)]
mod tests {
    use std::ffi::CStr;

    use super::*;

    #[test]
    fn every_status_has_a_message() {
        for s in [
            PtStatus::Ok,
            PtStatus::NullPointer,
            PtStatus::TooFewCorners,
            PtStatus::CoordinateOutOfRange,
            PtStatus::DuplicateCorner,
            PtStatus::ZeroArea,
            PtStatus::NotSeparable,
            PtStatus::PreconditionUncertain,
            PtStatus::Internal,
        ] {
            let msg = unsafe { CStr::from_ptr(pt_status_message(s as i32)) };
            assert_ne!(msg.to_bytes(), b"unknown status");
        }
        let msg = unsafe { CStr::from_ptr(pt_status_message(-5)) };
        assert_eq!(msg.to_bytes(), b"unknown status");
    }

    #[test]
    fn version_matches_manifest() {
        let v = unsafe { CStr::from_ptr(pt_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
