//! Brute-force ground truth for the tangent algorithms.
//!
//! Nothing here is constant-workspace or linear: hulls are materialized,
//! every corner pair is classified against every corner, and hull
//! disjointness is decided from edge intersections and containment. The
//! module shares only the exact predicates of [`crate::geom`] with the code
//! it checks.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::geom::{closed_segments_meet, orient, Point, Sign};
use crate::polygon::PolygonView;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("all corners are collinear; the convex hull is degenerate")]
    DegenerateHull,
    #[error("not in general position: the line through P0[{i}] and P1[{j}] passes through another corner")]
    GeneralPosition { i: usize, j: usize },
}

/// Convex hull as a counterclockwise list of corners, with the index of
/// each hull corner in the source polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullPolygon {
    pub corners: Vec<Point>,
    pub source_indices: Vec<usize>,
}

impl HullPolygon {
    /// Closed containment test.
    pub fn contains(&self, p: Point) -> bool {
        let n = self.corners.len();
        (0..n).all(|i| orient(self.corners[i], self.corners[(i + 1) % n], p) != Sign::Negative)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.corners.len();
        (0..n).map(move |i| (self.corners[i], self.corners[(i + 1) % n]))
    }
}

/// Monotone chain over `(point, index)` pairs, dropping collinear points.
/// May return fewer than three points for degenerate input.
fn monotone_chain(mut pts: Vec<(Point, usize)>) -> Vec<(Point, usize)> {
    pts.sort();
    pts.dedup_by_key(|(p, _)| *p);
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<(Point, usize)> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(Point, usize)>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &q in iter {
            while hull.len() >= start + 2
                && orient(hull[hull.len() - 2].0, hull[hull.len() - 1].0, q.0) != Sign::Positive
            {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    hull
}

pub fn convex_hull<V: PolygonView + ?Sized>(poly: &V) -> Result<HullPolygon, OracleError> {
    let hull = monotone_chain((0..poly.len()).map(|i| (poly.corner(i), i)).collect());
    if hull.len() < 3 {
        return Err(OracleError::DegenerateHull);
    }
    Ok(HullPolygon { corners: hull.iter().map(|h| h.0).collect(), source_indices: hull.iter().map(|h| h.1).collect() })
}

/// Hull disjointness from first principles: no pair of hull edges meets
/// and no hull corner of either polygon lies in the other hull.
pub fn hulls_disjoint_bruteforce<A, B>(p0: &A, p1: &B) -> bool
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    let h0 = monotone_chain((0..p0.len()).map(|i| (p0.corner(i), i)).collect());
    let h1 = monotone_chain((0..p1.len()).map(|i| (p1.corner(i), i)).collect());
    let segs = |h: &[(Point, usize)]| -> Vec<(Point, Point)> {
        match h.len() {
            1 => vec![(h[0].0, h[0].0)],
            2 => vec![(h[0].0, h[1].0)],
            n => (0..n).map(|i| (h[i].0, h[(i + 1) % n].0)).collect(),
        }
    };
    let (e0, e1) = (segs(&h0), segs(&h1));
    for &(a, b) in &e0 {
        for &(c, d) in &e1 {
            if closed_segments_meet(a, b, c, d) {
                return false;
            }
        }
    }
    let inside = |h: &[(Point, usize)], p: Point| {
        h.len() >= 3 && (0..h.len()).all(|i| orient(h[i].0, h[(i + 1) % h.len()].0, p) != Sign::Negative)
    };
    !(h0.iter().any(|&(p, _)| inside(&h1, p)) || h1.iter().any(|&(p, _)| inside(&h0, p)))
}

/// Every corner pair `(i, j)` whose line through `P0[i]` and `P1[j]` is a
/// common tangent, split by whether the polygons lie on the same side.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct OracleReport {
    pub separating_pairs: BTreeSet<(usize, usize)>,
    pub outer_pairs: BTreeSet<(usize, usize)>,
    pub hulls_disjoint: bool,
}

/// Sides occupied by a set of corners relative to a line.
#[derive(Debug, Clone, Copy, Default)]
struct Sides {
    left: bool,
    right: bool,
    on: bool,
}

impl Sides {
    fn add(&mut self, s: Sign) {
        match s {
            Sign::Positive => self.left = true,
            Sign::Negative => self.right = true,
            Sign::Zero => self.on = true,
        }
    }

    /// All corners in one closed half-plane.
    fn one_sided(&self) -> bool {
        !(self.left && self.right)
    }
}

fn sides_of<V: PolygonView + ?Sized>(poly: &V, a: Point, b: Point, skip: usize) -> Sides {
    let mut sides = Sides::default();
    for k in (0..poly.len()).filter(|&k| k != skip) {
        sides.add(orient(a, b, poly.corner(k)));
    }
    sides
}

/// Exhaustive classification under general position, `O(n0 n1 (n0 + n1))`.
///
/// Any corner lying on a candidate line aborts with
/// [`OracleError::GeneralPosition`]; under general position every common
/// tangent passes through exactly one corner of each polygon, so the
/// enumeration is complete.
pub fn classify_all_corner_pairs<A, B>(p0: &A, p1: &B) -> Result<OracleReport, OracleError>
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    let mut report = OracleReport { hulls_disjoint: hulls_disjoint_bruteforce(p0, p1), ..Default::default() };
    for i in 0..p0.len() {
        for j in 0..p1.len() {
            let (a, b) = (p0.corner(i), p1.corner(j));
            let s0 = sides_of(p0, a, b, i);
            let s1 = sides_of(p1, a, b, j);
            if s0.on || s1.on || a == b {
                return Err(OracleError::GeneralPosition { i, j });
            }
            if !(s0.one_sided() && s1.one_sided()) {
                continue;
            }
            if s0.left == s1.left {
                report.outer_pairs.insert((i, j));
            } else {
                report.separating_pairs.insert((i, j));
            }
        }
    }
    Ok(report)
}

/// Classification with closed half-planes, for inputs with collinear
/// corners. A line containing an edge shows up once per corner pair on it;
/// use [`same_line`] to group pairs. Lines through coincident corners are
/// skipped.
pub fn classify_corner_pairs_closed<A, B>(p0: &A, p1: &B) -> OracleReport
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    let mut report = OracleReport { hulls_disjoint: hulls_disjoint_bruteforce(p0, p1), ..Default::default() };
    for i in 0..p0.len() {
        for j in 0..p1.len() {
            let (a, b) = (p0.corner(i), p1.corner(j));
            if a == b {
                continue;
            }
            let s0 = sides_of(p0, a, b, i);
            let s1 = sides_of(p1, a, b, j);
            if !(s0.one_sided() && s1.one_sided()) {
                continue;
            }
            let outer = (!s0.left || !s1.right) && (!s0.right || !s1.left);
            let separating = (!s0.left || !s1.left) && (!s0.right || !s1.right);
            if outer {
                report.outer_pairs.insert((i, j));
            }
            if separating {
                report.separating_pairs.insert((i, j));
            }
        }
    }
    report
}

/// Whether corner pairs `x` and `y` span the same line.
pub fn same_line<A, B>(p0: &A, p1: &B, x: (usize, usize), y: (usize, usize)) -> bool
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    let (a, b) = (p0.corner(x.0), p1.corner(x.1));
    orient(a, b, p0.corner(y.0)) == Sign::Zero && orient(a, b, p1.corner(y.1)) == Sign::Zero
}

/// Number of distinct lines among a set of corner pairs.
pub fn distinct_lines<A, B>(p0: &A, p1: &B, pairs: &BTreeSet<(usize, usize)>) -> usize
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for &pair in pairs {
        if !reps.iter().any(|&r| same_line(p0, p1, r, pair)) {
            reps.push(pair);
        }
    }
    reps.len()
}

/// Closed point-in-polygon test by ray crossing; boundary points count as
/// inside.
pub fn polygon_contains<V: PolygonView + ?Sized>(poly: &V, p: Point) -> bool {
    let n = poly.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (poly.corner(i), poly.corner(i + 1));
        if orient(a, b, p) == Sign::Zero
            && a.x().min(b.x()) <= p.x()
            && p.x() <= a.x().max(b.x())
            && a.y().min(b.y()) <= p.y()
            && p.y() <= a.y().max(b.y())
        {
            return true;
        }
        // Half-open rule on y so shared endpoints are counted once.
        if (a.y() > p.y()) != (b.y() > p.y()) {
            // Crossing is right of p iff p is on the left of an upward edge
            // (or the right of a downward one).
            let s = orient(a, b, p);
            if (b.y() > a.y()) == (s == Sign::Positive) {
                inside = !inside;
            }
        }
    }
    inside
}

/// Whether two polygons, as closed regions, are disjoint.
pub fn polygons_disjoint<A, B>(p0: &A, p1: &B) -> bool
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    for i in 0..p0.len() {
        for j in 0..p1.len() {
            if closed_segments_meet(p0.corner(i), p0.corner(i + 1), p1.corner(j), p1.corner(j + 1)) {
                return false;
            }
        }
    }
    !polygon_contains(p0, p1.corner(0)) && !polygon_contains(p1, p0.corner(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::Polygon;

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::new(x, y).unwrap()).collect()
    }

    #[test]
    fn hull_of_convex_polygon_is_itself() {
        let sq = Polygon::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let h = convex_hull(&sq).unwrap();
        assert_eq!(h.corners.len(), 4);
        let set: BTreeSet<Point> = h.corners.iter().copied().collect();
        assert_eq!(set, sq.corners().iter().copied().collect());
    }

    #[test]
    fn hull_drops_interior_point() {
        // Square of side 2 with its centre as an extra (reflex) corner.
        let poly = Polygon::from_coords(&[(0, 0), (2, 0), (2, 2), (1, 1), (0, 2)]);
        let h = convex_hull(&poly).unwrap();
        assert_eq!(h.corners.len(), 4);
        assert!(!h.corners.contains(&Point::new(1, 1).unwrap()));
    }

    #[test]
    fn hull_of_eight_corner_star_keeps_extremes() {
        // Tips at distance 10 on the axes, reflex corners at (±2, ±2).
        let star = Polygon::from_coords(&[(10, 0), (2, 2), (0, 10), (-2, 2), (-10, 0), (-2, -2), (0, -10), (2, -2)]);
        let h = convex_hull(&star).unwrap();
        assert_eq!(h.source_indices.len(), 4);
        let mut idx = h.source_indices.clone();
        idx.sort();
        assert_eq!(idx, vec![0, 2, 4, 6]);
    }

    #[test]
    fn hull_degenerate() {
        struct Line;
        impl PolygonView for Line {
            fn len(&self) -> usize {
                3
            }
            fn corner(&self, i: usize) -> Point {
                Point::new((i % 3) as i64, 0).unwrap()
            }
            fn orientation(&self) -> crate::polygon::Orientation {
                crate::polygon::Orientation::CounterClockwise
            }
        }
        assert_eq!(convex_hull(&Line), Err(OracleError::DegenerateHull));
    }

    #[test]
    fn two_squares_closed_classification() {
        let p0 = Polygon::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let p1 = Polygon::from_coords(&[(3, 0), (4, 0), (4, 1), (3, 1)]);
        let r = classify_corner_pairs_closed(&p0, &p1);
        assert!(r.hulls_disjoint);
        // (1,0)-(3,1) and (1,1)-(3,0)
        assert_eq!(r.separating_pairs, [(1, 3), (2, 0)].into_iter().collect());
        // The lines y = 0 and y = 1, each through two corners of each square.
        assert_eq!(r.outer_pairs.len(), 8);
        assert_eq!(distinct_lines(&p0, &p1, &r.outer_pairs), 2);
        assert_eq!(classify_all_corner_pairs(&p0, &p1).unwrap_err(), OracleError::GeneralPosition { i: 0, j: 0 });
    }

    #[test]
    fn two_triangles_strict_classification() {
        // Brute force by hand: P0 = (0,0),(4,0),(1,3); P1 = P0 + (20, 1).
        let p0 = Polygon::from_coords(&[(0, 0), (4, 0), (1, 3)]);
        let p1 = Polygon::from_coords(&[(20, 1), (24, 1), (21, 4)]);
        let r = classify_all_corner_pairs(&p0, &p1).unwrap();
        assert!(r.hulls_disjoint);
        // Outer: bottom (4,0)-(24,1) and top (1,3)-(21,4).
        assert_eq!(r.outer_pairs, [(1, 1), (2, 2)].into_iter().collect());
        // Separating: (4,0)-(21,4) and (1,3)-(20,1).
        assert_eq!(r.separating_pairs, [(1, 2), (2, 0)].into_iter().collect());
    }

    #[test]
    fn nested_triangles() {
        let p0 = Polygon::from_coords(&[(0, 0), (10, 0), (5, 5)]);
        let p1 = Polygon::from_coords(&[(4, 1), (6, 1), (5, 2)]);
        let r = classify_all_corner_pairs(&p0, &p1).unwrap();
        assert!(r.separating_pairs.is_empty());
        assert!(r.outer_pairs.is_empty());
        assert!(!r.hulls_disjoint);
        assert!(!hulls_disjoint_bruteforce(&p0, &p1));
    }

    #[test]
    fn disjointness_bruteforce_cases() {
        let p0 = Polygon::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let p1 = Polygon::from_coords(&[(3, 0), (4, 0), (4, 1), (3, 1)]);
        assert!(hulls_disjoint_bruteforce(&p0, &p1));
        // Crossing hull edges.
        let p2 = Polygon::from_coords(&[(0, 0), (4, 0), (2, 3)]);
        let p3 = Polygon::from_coords(&[(1, 2), (5, 2), (3, 5)]);
        assert!(!hulls_disjoint_bruteforce(&p2, &p3));
        // Touching corners count as intersecting.
        let p4 = Polygon::from_coords(&[(4, 0), (8, 0), (6, 3)]);
        assert!(!hulls_disjoint_bruteforce(&p2, &p4));
    }

    #[test]
    fn point_in_polygon() {
        // U shape opening upward.
        let u = Polygon::new(pts(&[(0, 0), (6, 0), (6, 6), (4, 6), (4, 2), (2, 2), (2, 6), (0, 6)])).unwrap();
        assert!(polygon_contains(&u, Point::new(1, 1).unwrap()));
        assert!(polygon_contains(&u, Point::new(5, 5).unwrap()));
        assert!(!polygon_contains(&u, Point::new(3, 4).unwrap()));
        assert!(polygon_contains(&u, Point::new(3, 2).unwrap())); // boundary
        assert!(!polygon_contains(&u, Point::new(7, 3).unwrap()));
        // Ray through a vertex at y = 2.
        assert!(!polygon_contains(&u, Point::new(-1, 2).unwrap()));
        assert!(polygon_contains(&u, Point::new(1, 2).unwrap()));

        let inner = Polygon::from_coords(&[(3, 3), (4, 5), (2, 5)]);
        assert!(!polygons_disjoint(&u, &inner)); // touches (4,5) and (2,5)
        let inner = Polygon::from_coords(&[(3, 3), (3, 5), (2, 4)]);
        assert!(!polygons_disjoint(&u, &inner)); // (2,4) on the boundary
        let inner = Polygon::from_coords(&[(25, 30), (35, 45), (25, 50)]);
        let u10 =
            Polygon::new(pts(&[(0, 0), (60, 0), (60, 60), (40, 60), (40, 20), (20, 20), (20, 60), (0, 60)])).unwrap();
        assert!(polygons_disjoint(&u10, &inner));
        assert!(!hulls_disjoint_bruteforce(&u10, &inner));
    }
}
