//! Read-only polygon views with cyclic indexing.
//!
//! The tangent algorithms only ever touch a polygon through
//! [`PolygonView::corner`]. Everything else in this module (simplicity and
//! general-position validation) is preprocessing for harnesses and the CLI
//! and is allowed quadratic or cubic time.

use std::cell::Cell;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::geom::{closed_segments_meet, orient, within_box, Point, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Orientation {
    #[serde(rename = "ccw")]
    CounterClockwise,
    #[serde(rename = "cw")]
    Clockwise,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
        }
    }

    /// Short form used by the file format.
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::CounterClockwise => "ccw",
            Orientation::Clockwise => "cw",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 corners, got {0}")]
    TooFewCorners(usize),
    #[error("corners {0} and {1} coincide")]
    DuplicateConsecutive(usize, usize),
    #[error("polygon has zero signed area")]
    ZeroArea,
    #[error("declared orientation {declared} but corners are {actual}")]
    OrientationMismatch { declared: Orientation, actual: Orientation },
}

/// Indexed, read-only access to the corners of a polygon.
///
/// Indices are interpreted modulo [`len`](PolygonView::len), so callers may
/// pass any non-negative index.
pub trait PolygonView {
    fn len(&self) -> usize;

    fn corner(&self, i: usize) -> Point;

    fn orientation(&self) -> Orientation;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<V: PolygonView + ?Sized> PolygonView for &V {
    #[inline]
    fn len(&self) -> usize {
        (**self).len()
    }

    #[inline]
    fn corner(&self, i: usize) -> Point {
        (**self).corner(i)
    }

    #[inline]
    fn orientation(&self) -> Orientation {
        (**self).orientation()
    }
}

/// An owned simple polygon whose orientation has been checked against its
/// signed area.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    corners: Vec<Point>,
    orientation: Orientation,
}

impl Polygon {
    /// Builds a polygon and infers its orientation from the signed area.
    pub fn new(corners: Vec<Point>) -> Result<Self, PolygonError> {
        let n = corners.len();
        if n < 3 {
            return Err(PolygonError::TooFewCorners(n));
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if corners[i] == corners[j] {
                return Err(PolygonError::DuplicateConsecutive(i, j));
            }
        }
        let area = shoelace(&corners);
        let orientation = match area.signum() {
            1 => Orientation::CounterClockwise,
            -1 => Orientation::Clockwise,
            _ => return Err(PolygonError::ZeroArea),
        };
        Ok(Polygon { corners, orientation })
    }

    /// Builds a polygon and fails unless its corners run in `declared` order.
    pub fn with_orientation(corners: Vec<Point>, declared: Orientation) -> Result<Self, PolygonError> {
        let poly = Polygon::new(corners)?;
        if poly.orientation != declared {
            return Err(PolygonError::OrientationMismatch { declared, actual: poly.orientation });
        }
        Ok(poly)
    }

    /// Convenience for tests and literals. Panics on invalid input.
    pub fn from_coords(coords: &[(i64, i64)]) -> Self {
        let corners = coords.iter().map(|&(x, y)| Point::new(x, y).expect("coordinate out of range")).collect();
        Polygon::new(corners).expect("invalid polygon")
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    /// A copy with the corner order reversed (index `i` maps to `-i mod n`).
    pub fn to_reversed(&self) -> Polygon {
        let rev = Reversed::new(self);
        Polygon { corners: (0..self.len()).map(|i| rev.corner(i)).collect(), orientation: self.orientation.reversed() }
    }
}

impl PolygonView for Polygon {
    #[inline]
    fn len(&self) -> usize {
        self.corners.len()
    }

    #[inline]
    fn corner(&self, i: usize) -> Point {
        self.corners[i % self.corners.len()]
    }

    #[inline]
    fn orientation(&self) -> Orientation {
        self.orientation
    }
}

/// The same corners in reversed cyclic order: `corner(i) == inner.corner(-i mod n)`.
#[derive(Debug, Clone, Copy)]
pub struct Reversed<V> {
    inner: V,
}

impl<V: PolygonView> Reversed<V> {
    pub fn new(inner: V) -> Self {
        Reversed { inner }
    }

    pub fn into_inner(self) -> V {
        self.inner
    }

    /// Index into the wrapped view corresponding to our index `i`.
    #[inline]
    pub fn original_index(&self, i: usize) -> usize {
        let n = self.inner.len();
        (n - i % n) % n
    }
}

impl<V: PolygonView> PolygonView for Reversed<V> {
    #[inline]
    fn len(&self) -> usize {
        self.inner.len()
    }

    #[inline]
    fn corner(&self, i: usize) -> Point {
        self.inner.corner(self.original_index(i))
    }

    #[inline]
    fn orientation(&self) -> Orientation {
        self.inner.orientation().reversed()
    }
}

/// Counts every corner access, repeated reads included.
///
/// The counter lives in a [`Cell`], so a counted view is confined to one
/// thread and should be owned by a single run.
#[derive(Debug)]
pub struct Counted<V> {
    inner: V,
    reads: Cell<u64>,
}

impl<V: PolygonView> Counted<V> {
    pub fn new(inner: V) -> Self {
        Counted { inner, reads: Cell::new(0) }
    }

    pub fn reads(&self) -> u64 {
        self.reads.get()
    }

    pub fn reset(&self) {
        self.reads.set(0);
    }
}

impl<V: PolygonView> PolygonView for Counted<V> {
    #[inline]
    fn len(&self) -> usize {
        self.inner.len()
    }

    #[inline]
    fn corner(&self, i: usize) -> Point {
        self.reads.set(self.reads.get() + 1);
        self.inner.corner(i)
    }

    #[inline]
    fn orientation(&self) -> Orientation {
        self.inner.orientation()
    }
}

/// A view presented in a requested orientation, reversing when needed.
#[derive(Debug, Clone, Copy)]
pub enum Oriented<V> {
    Forward(V),
    Backward(Reversed<V>),
}

impl<V: PolygonView> Oriented<V> {
    pub fn new(view: V, wanted: Orientation) -> Self {
        if view.orientation() == wanted {
            Oriented::Forward(view)
        } else {
            Oriented::Backward(Reversed::new(view))
        }
    }

    /// Maps an index of this view back to the underlying view, reduced mod n.
    pub fn original_index(&self, i: usize) -> usize {
        match self {
            Oriented::Forward(v) => i % v.len(),
            Oriented::Backward(r) => r.original_index(i),
        }
    }
}

impl<V: PolygonView> PolygonView for Oriented<V> {
    #[inline]
    fn len(&self) -> usize {
        match self {
            Oriented::Forward(v) => v.len(),
            Oriented::Backward(r) => r.len(),
        }
    }

    #[inline]
    fn corner(&self, i: usize) -> Point {
        match self {
            Oriented::Forward(v) => v.corner(i),
            Oriented::Backward(r) => r.corner(i),
        }
    }

    #[inline]
    fn orientation(&self) -> Orientation {
        match self {
            Oriented::Forward(v) => v.orientation(),
            Oriented::Backward(r) => r.orientation(),
        }
    }
}

fn shoelace(corners: &[Point]) -> i128 {
    let n = corners.len();
    (0..n)
        .map(|i| {
            let (a, b) = (corners[i], corners[(i + 1) % n]);
            a.x() as i128 * b.y() as i128 - b.x() as i128 * a.y() as i128
        })
        .sum()
}

/// Twice the signed area; positive iff the corners run counterclockwise.
pub fn signed_area_times_two<V: PolygonView + ?Sized>(poly: &V) -> i128 {
    let n = poly.len();
    (0..n)
        .map(|i| {
            let (a, b) = (poly.corner(i), poly.corner(i + 1));
            a.x() as i128 * b.y() as i128 - b.x() as i128 * a.y() as i128
        })
        .sum()
}

/// Pairs of edges `(i, j)`, `i < j`, that violate simplicity. Edge `i` runs
/// from corner `i` to corner `i + 1`.
pub fn simplicity_violations<V: PolygonView + ?Sized>(poly: &V) -> Vec<(usize, usize)> {
    let n = poly.len();
    let mut bad = Vec::new();
    for i in 0..n {
        let (a, b) = (poly.corner(i), poly.corner(i + 1));
        for j in i + 1..n {
            let (c, d) = (poly.corner(j), poly.corner(j + 1));
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let violates = if a == b || c == d {
                true
            } else if adjacent {
                // Share exactly one endpoint; the far endpoint of either
                // edge must not lie on the other.
                let (shared, far_ab, far_cd) = if b == c { (b, a, d) } else { (a, b, c) };
                debug_assert!(shared == c || shared == d);
                (orient(a, b, far_cd) == Sign::Zero && within_box(a, b, far_cd))
                    || (orient(c, d, far_ab) == Sign::Zero && within_box(c, d, far_ab))
            } else {
                closed_segments_meet(a, b, c, d)
            };
            if violates {
                bad.push((i, j));
            }
        }
    }
    bad
}

pub fn is_simple<V: PolygonView + ?Sized>(poly: &V) -> bool {
    simplicity_violations(poly).is_empty()
}

/// A corner of one of the two input polygons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CornerRef {
    pub polygon: u8,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    SharedCorner { first: CornerRef, second: CornerRef },
    Collinear { corners: [CornerRef; 3] },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SharedCorner { first, second } => {
                write!(f, "shared corner: P{}[{}] = P{}[{}]", first.polygon, first.index, second.polygon, second.index)
            }
            Violation::Collinear { corners: [a, b, c] } => write!(
                f,
                "collinear: P{}[{}], P{}[{}], P{}[{}]",
                a.polygon, a.index, b.polygon, b.index, c.polygon, c.index
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every shared corner between the polygons and every collinear triple of
/// distinct points in the union of their corners. Cubic in `n0 + n1`.
pub fn check_general_position<A, B>(p0: &A, p1: &B) -> ValidationReport
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    let mut all: Vec<(CornerRef, Point)> = Vec::with_capacity(p0.len() + p1.len());
    all.extend((0..p0.len()).map(|i| (CornerRef { polygon: 0, index: i }, p0.corner(i))));
    all.extend((0..p1.len()).map(|i| (CornerRef { polygon: 1, index: i }, p1.corner(i))));

    let mut violations = Vec::new();
    for &(r0, a) in all.iter().filter(|(r, _)| r.polygon == 0) {
        for &(r1, b) in all.iter().filter(|(r, _)| r.polygon == 1) {
            if a == b {
                violations.push(Violation::SharedCorner { first: r0, second: r1 });
            }
        }
    }

    let m = all.len();
    for i in 0..m {
        for j in i + 1..m {
            if all[i].1 == all[j].1 {
                continue;
            }
            for k in j + 1..m {
                let c = all[k].1;
                if c == all[i].1 || c == all[j].1 {
                    continue;
                }
                if orient(all[i].1, all[j].1, c) == Sign::Zero {
                    violations.push(Violation::Collinear { corners: [all[i].0, all[j].0, all[k].0] });
                }
            }
        }
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        Polygon::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    #[test]
    fn cyclic_corner_access() {
        let sq = square();
        assert_eq!(sq.corner(5), Point::new(1, 0).unwrap());
        assert_eq!(sq.corner(0), Point::new(0, 0).unwrap());
        assert_eq!(sq.corner(4), Point::new(0, 0).unwrap());
    }

    #[test]
    fn signed_area_signs() {
        let sq = square();
        assert_eq!(signed_area_times_two(&sq), 2);
        assert_eq!(signed_area_times_two(&Reversed::new(&sq)), -2);
        let cw = Polygon::from_coords(&[(0, 0), (0, 1), (1, 1), (1, 0)]);
        assert_eq!(cw.orientation(), Orientation::Clockwise);
        assert_eq!(signed_area_times_two(&cw), -2);
    }

    #[test]
    fn collinear_triple_has_zero_area() {
        let pts: Vec<Point> = [(0, 0), (1, 0), (2, 0)].iter().map(|&(x, y)| Point::new(x, y).unwrap()).collect();
        assert_eq!(Polygon::new(pts.clone()), Err(PolygonError::ZeroArea));
        struct Raw(Vec<Point>);
        impl PolygonView for Raw {
            fn len(&self) -> usize {
                self.0.len()
            }
            fn corner(&self, i: usize) -> Point {
                self.0[i % self.0.len()]
            }
            fn orientation(&self) -> Orientation {
                Orientation::CounterClockwise
            }
        }
        assert_eq!(signed_area_times_two(&Raw(pts.clone())), 0);
        assert!(!is_simple(&Raw(pts)));
    }

    #[test]
    fn construction_errors() {
        let p = |x, y| Point::new(x, y).unwrap();
        assert_eq!(Polygon::new(vec![p(0, 0), p(1, 0)]), Err(PolygonError::TooFewCorners(2)));
        assert_eq!(
            Polygon::new(vec![p(0, 0), p(1, 0), p(1, 0), p(0, 1)]),
            Err(PolygonError::DuplicateConsecutive(1, 2))
        );
        assert_eq!(
            Polygon::new(vec![p(0, 0), p(1, 0), p(0, 1), p(0, 0)]),
            Err(PolygonError::DuplicateConsecutive(3, 0))
        );
        assert!(matches!(
            Polygon::with_orientation(vec![p(0, 0), p(0, 1), p(1, 0)], Orientation::CounterClockwise),
            Err(PolygonError::OrientationMismatch { .. })
        ));
    }

    #[test]
    fn reversed_view_indexing() {
        let sq = square();
        let rev = Reversed::new(&sq);
        assert_eq!(rev.orientation(), Orientation::Clockwise);
        for i in 0..12 {
            assert_eq!(rev.corner(i), sq.corner((4 - i % 4) % 4));
        }
        let twice = Reversed::new(rev);
        for i in 0..12 {
            assert_eq!(twice.corner(i), sq.corner(i));
        }
        assert_eq!(twice.orientation(), Orientation::CounterClockwise);
        assert_eq!(sq.to_reversed().corners(), &(0..4).map(|i| rev.corner(i)).collect::<Vec<_>>()[..]);
    }

    #[test]
    fn reversed_view_is_pointer_sized() {
        assert_eq!(std::mem::size_of::<Reversed<&Polygon>>(), std::mem::size_of::<&Polygon>());
    }

    #[test]
    fn counted_view_counts_every_read() {
        let sq = square();
        let counted = Counted::new(&sq);
        for i in 0..10 {
            counted.corner(i % 2);
        }
        assert_eq!(counted.reads(), 10);
        counted.reset();
        assert_eq!(counted.reads(), 0);
    }

    #[test]
    fn oriented_view_maps_indices() {
        let cw = square().to_reversed();
        let view = Oriented::new(&cw, Orientation::CounterClockwise);
        assert_eq!(view.orientation(), Orientation::CounterClockwise);
        for i in 0..8 {
            assert_eq!(view.corner(i), cw.corner(view.original_index(i)));
        }
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&square()));
        assert!(is_simple(&Polygon::from_coords(&[(0, 0), (3, 0), (1, 2)])));
        let bowtie =
            Polygon::new([(0, 0), (2, 2), (2, 0), (0, 2)].iter().map(|&(x, y)| Point::new(x, y).unwrap()).collect());
        // The bowtie has zero net area, so it is rejected at construction.
        assert_eq!(bowtie, Err(PolygonError::ZeroArea));
        let bowtie = Polygon::from_coords(&[(0, 0), (4, 4), (4, 0), (0, 2)]);
        assert!(!is_simple(&bowtie));
        assert_eq!(simplicity_violations(&bowtie), vec![(0, 2)]);
    }

    #[test]
    fn simplicity_rejects_spikes_and_touching() {
        // Corner 3 revisits the segment between corners 0 and 1.
        let touching = Polygon::from_coords(&[(0, 0), (4, 0), (4, 4), (2, 0), (0, 4)]);
        assert!(!is_simple(&touching));
        // A spike that doubles back along its incoming edge.
        let spike = Polygon::from_coords(&[(0, 0), (4, 0), (2, 0), (2, 3)]);
        assert!(!is_simple(&spike));
    }

    #[test]
    fn general_position_reports() {
        let a = Polygon::from_coords(&[(0, 0), (3, 1), (1, 4)]);
        let b = Polygon::from_coords(&[(10, 1), (13, 2), (11, 6)]);
        assert!(check_general_position(&a, &b).is_clean());

        let shared = Polygon::from_coords(&[(0, 0), (-3, -2), (-1, -5)]);
        let report = check_general_position(&a, &shared);
        assert_eq!(
            report.violations,
            vec![Violation::SharedCorner {
                first: CornerRef { polygon: 0, index: 0 },
                second: CornerRef { polygon: 1, index: 0 },
            }]
        );

        let e = Polygon::from_coords(&[(0, 0), (-4, 1), (-2, -6)]);
        let f = Polygon::from_coords(&[(1, 1), (2, 2), (7, -9)]);
        let report = check_general_position(&e, &f);
        assert_eq!(
            report.violations,
            vec![Violation::Collinear {
                corners: [
                    CornerRef { polygon: 0, index: 0 },
                    CornerRef { polygon: 1, index: 0 },
                    CornerRef { polygon: 1, index: 1 }
                ]
            }]
        );
    }
}
