//! Exact integer predicates.
//!
//! Coordinates are bounded by [`MAX_COORD`] in absolute value. The cross
//! product is evaluated in `i128`, so every sign returned here is exact.

use std::fmt;
use std::ops::Neg;

use thiserror::Error;

/// Largest admissible absolute coordinate value (2^30).
///
/// Differences of two coordinates fit in 31 bits and their products in 62,
/// so the `i128` intermediates used by [`orient`] have ample headroom. The
/// bound is kept at 2^30 so that the same values are also exact with 64-bit
/// intermediates in bindings that lack a wider integer type.
pub const MAX_COORD: i64 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("coordinate {value} exceeds the bound |c| <= 2^30")]
    CoordinateOutOfRange { value: i64 },
    #[error("a line needs two distinct points")]
    DegenerateLine,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
}

/// A point on the integer grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    x: i64,
    y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Result<Self, GeomError> {
        for value in [x, y] {
            if !(-MAX_COORD..=MAX_COORD).contains(&value) {
                return Err(GeomError::CoordinateOutOfRange { value });
            }
        }
        Ok(Point { x, y })
    }

    #[inline]
    pub fn x(self) -> i64 {
        self.x
    }

    #[inline]
    pub fn y(self) -> i64 {
        self.y
    }

    pub fn translate(self, dx: i64, dy: i64) -> Result<Self, GeomError> {
        Point::new(self.x.saturating_add(dx), self.y.saturating_add(dy))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl TryFrom<(i64, i64)> for Point {
    type Error = GeomError;

    fn try_from((x, y): (i64, i64)) -> Result<Self, Self::Error> {
        Point::new(x, y)
    }
}

/// Sign of an orientation determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: i128) -> Sign {
        match v.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// `(b - a)^perp . (c - b)` in exact arithmetic, where `v^perp` is `v`
/// rotated counterclockwise by a quarter turn.
#[inline]
pub fn cross(a: Point, b: Point, c: Point) -> i128 {
    let (abx, aby) = (b.x as i128 - a.x as i128, b.y as i128 - a.y as i128);
    let (bcx, bcy) = (c.x as i128 - b.x as i128, c.y as i128 - b.y as i128);
    // (-aby, abx) . (bcx, bcy)
    abx * bcy - aby * bcx
}

/// Positive iff `c` is strictly left of the directed line `a -> b`, zero iff
/// the three points are collinear.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> Sign {
    Sign::of(cross(a, b, c))
}

/// Closed half-plane to the left of `a -> b`.
pub fn in_left_half_plane(a: Point, b: Point, c: Point) -> Result<bool, GeomError> {
    if a == b {
        return Err(GeomError::DegenerateLine);
    }
    Ok(orient(a, b, c) != Sign::Negative)
}

/// Closed half-plane to the right of `a -> b`, i.e. the left half-plane of `b -> a`.
pub fn in_right_half_plane(a: Point, b: Point, c: Point) -> Result<bool, GeomError> {
    in_left_half_plane(b, a, c)
}

/// `c` lies in the bounding box of `a` and `b`. Only meaningful when the
/// three points are collinear.
pub(crate) fn within_box(a: Point, b: Point, c: Point) -> bool {
    a.x.min(b.x) <= c.x && c.x <= a.x.max(b.x) && a.y.min(b.y) <= c.y && c.y <= a.y.max(b.y)
}

/// Whether the closed segments `pq` and `rs` share at least one point.
pub fn segments_intersect(p: Point, q: Point, r: Point, s: Point) -> Result<bool, GeomError> {
    if p == q || r == s {
        return Err(GeomError::DegenerateSegment);
    }
    Ok(closed_segments_meet(p, q, r, s))
}

pub(crate) fn closed_segments_meet(p: Point, q: Point, r: Point, s: Point) -> bool {
    let d1 = orient(p, q, r);
    let d2 = orient(p, q, s);
    let d3 = orient(r, s, p);
    let d4 = orient(r, s, q);

    if d1 != d2 && d1 != Sign::Zero && d2 != Sign::Zero && d3 != d4 && d3 != Sign::Zero && d4 != Sign::Zero {
        return true;
    }
    (d1 == Sign::Zero && within_box(p, q, r))
        || (d2 == Sign::Zero && within_box(p, q, s))
        || (d3 == Sign::Zero && within_box(r, s, p))
        || (d4 == Sign::Zero && within_box(r, s, q))
}
