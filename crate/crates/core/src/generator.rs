//! Seeded test instances for each hull regime.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64` (`rand_chacha` 0.3.1,
//! `rand` 0.8.7, both pinned exactly), so a [`GenSpec`] reproduces the same
//! corners from run to run.
//!
//! Star polygons take one random angle in each of `n` equal sectors and a
//! random radius per corner. They are checked exactly in linear time: every
//! consecutive pair of corners turns strictly counterclockwise around the
//! centre and the corners wind around it exactly once, which makes the
//! polygon star-shaped and therefore simple. Pairs with at most
//! [`FULL_VALIDATION_LIMIT`] corners in total are additionally run through
//! the quadratic simplicity check and the cubic general-position check, and
//! are redrawn until both pass.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::geom::{orient, Point, Sign, MAX_COORD};
use crate::oracle::{hulls_disjoint_bruteforce, polygons_disjoint};
use crate::polygon::{check_general_position, is_simple, Polygon, PolygonView};

/// Largest `n0 + n1` for which generated pairs get the full cubic
/// general-position check.
pub const FULL_VALIDATION_LIMIT: usize = 256;

const MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("no valid instance after {0} attempts")]
    BudgetExhausted(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    DisjointHulls,
    IntersectingHulls,
    NestedHulls,
    DisjointPolygonsOverlappingHulls,
}

impl Regime {
    pub const ALL: [Regime; 4] = [
        Regime::DisjointHulls,
        Regime::IntersectingHulls,
        Regime::NestedHulls,
        Regime::DisjointPolygonsOverlappingHulls,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::DisjointHulls => "disjoint-hulls",
            Regime::IntersectingHulls => "intersecting-hulls",
            Regime::NestedHulls => "nested-hulls",
            Regime::DisjointPolygonsOverlappingHulls => "overlapping-hulls",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Regime {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Regime::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| GenError::InvalidParameters(format!("unknown regime '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenSpec {
    pub seed: u64,
    pub n0: usize,
    pub n1: usize,
    pub regime: Regime,
    /// Outer radius of the first polygon, in grid units.
    pub coordinate_scale: i64,
}

impl GenSpec {
    pub const DEFAULT_SCALE: i64 = 1_000_000;

    pub fn new(seed: u64, n0: usize, n1: usize, regime: Regime) -> Self {
        GenSpec { seed, n0, n1, regime, coordinate_scale: Self::DEFAULT_SCALE }
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn point(x: f64, y: f64) -> Result<Point, GenError> {
    let (x, y) = (x.round(), y.round());
    if x.abs() > MAX_COORD as f64 || y.abs() > MAX_COORD as f64 {
        return Err(GenError::InvalidParameters("coordinates exceed the grid bound".into()));
    }
    Point::new(x as i64, y as i64).map_err(|e| GenError::InvalidParameters(e.to_string()))
}

/// Pseudo-angle class: 0 for directions in `[0, pi)`, 1 for `[pi, 2pi)`.
fn half(c: Point, p: Point) -> u8 {
    let (dx, dy) = (p.x() - c.x(), p.y() - c.y());
    if dy > 0 || (dy == 0 && dx > 0) {
        0
    } else {
        1
    }
}

/// Exact test that `poly` is star-shaped around `c` with strictly
/// increasing angles, i.e. each corner is a strict left turn around `c`
/// from the previous one and the corners wind around `c` once.
pub fn is_star_around<V: PolygonView + ?Sized>(poly: &V, c: Point) -> bool {
    let n = poly.len();
    let mut wraps = 0;
    for i in 0..n {
        let (a, b) = (poly.corner(i), poly.corner(i + 1));
        if orient(c, a, b) != Sign::Positive {
            return false;
        }
        // Each step turns by less than a half turn, so the angle wraps past
        // the +x axis exactly when it moves from the lower half to the upper.
        if half(c, a) == 1 && half(c, b) == 0 {
            wraps += 1;
        }
    }
    wraps == 1
}

fn draw_star(rng: &mut ChaCha8Rng, n: usize, center: Point, r_min: f64, r_max: f64) -> Result<Polygon, GenError> {
    let offset = rng.gen_range(0.0..TAU);
    let sector = TAU / n as f64;
    let mut corners = Vec::with_capacity(n);
    for i in 0..n {
        // One angle per equal sector keeps neighbours apart at large n.
        let theta = offset + (i as f64 + rng.gen_range(0.05..0.95)) * sector;
        let r = rng.gen_range(r_min..=r_max);
        corners.push(point(center.x() as f64 + r * theta.cos(), center.y() as f64 + r * theta.sin())?);
    }
    // Rejections surface as InvalidParameters and are redrawn by callers.
    let poly = Polygon::new(corners).map_err(|e| GenError::InvalidParameters(e.to_string()))?;
    if !is_star_around(&poly, center) {
        return Err(GenError::InvalidParameters("not star-shaped after snapping".into()));
    }
    Ok(poly)
}

fn validate_single(poly: &Polygon) -> bool {
    if poly.len() > FULL_VALIDATION_LIMIT {
        return true;
    }
    is_simple(poly) && collinear_free(poly.corners())
}

fn collinear_free(pts: &[Point]) -> bool {
    let m = pts.len();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                if orient(pts[i], pts[j], pts[k]) == Sign::Zero {
                    return false;
                }
            }
        }
    }
    true
}

fn check_star_params(n: usize, r_min: i64, r_max: i64) -> Result<(), GenError> {
    if n < 3 {
        return Err(GenError::InvalidParameters(format!("n = {n} < 3")));
    }
    if !(0 < r_min && r_min < r_max) {
        return Err(GenError::InvalidParameters(format!("need 0 < r_min < r_max, got {r_min}, {r_max}")));
    }
    if r_max > MAX_COORD / 4 {
        return Err(GenError::InvalidParameters(format!("r_max = {r_max} too large for the grid")));
    }
    Ok(())
}

/// A random counterclockwise star-shaped polygon around `center` with
/// corner distances in `[r_min, r_max]`, free of collinear corner triples
/// (checked when `n <= FULL_VALIDATION_LIMIT`).
pub fn random_star_polygon(seed: u64, n: usize, center: Point, r_min: i64, r_max: i64) -> Result<Polygon, GenError> {
    check_star_params(n, r_min, r_max)?;
    let mut rng = rng_for(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Ok(poly) = draw_star(&mut rng, n, center, r_min as f64, r_max as f64) {
            if validate_single(&poly) {
                return Ok(poly);
            }
        }
    }
    Err(GenError::BudgetExhausted(MAX_ATTEMPTS))
}

fn pair_in_general_position(p0: &Polygon, p1: &Polygon) -> bool {
    if p0.len() + p1.len() > FULL_VALIDATION_LIMIT {
        return true;
    }
    is_simple(p0) && is_simple(p1) && check_general_position(p0, p1).is_clean()
}

/// Distance from `c` to the nearest edge line of a star polygon around `c`.
fn inscribed_radius(poly: &Polygon, c: Point) -> f64 {
    (0..poly.len())
        .map(|i| {
            let (a, b) = (poly.corner(i), poly.corner(i + 1));
            let (ex, ey) = ((b.x() - a.x()) as f64, (b.y() - a.y()) as f64);
            let cross = ex * (c.y() - a.y()) as f64 - ey * (c.x() - a.x()) as f64;
            cross.abs() / ex.hypot(ey)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Two counterclockwise polygons in the requested regime.
///
/// * `DisjointHulls`: star polygons whose bounding disks are separated.
/// * `IntersectingHulls`: star polygons with overlapping disks whose hull
///   boundaries cross.
/// * `NestedHulls`: the second star lies inside the inscribed disk of the
///   first.
/// * `DisjointPolygonsOverlappingHulls`: two interleaved combs, see
///   [`interleaved_combs`].
pub fn generate_pair(spec: &GenSpec) -> Result<(Polygon, Polygon), GenError> {
    let scale = spec.coordinate_scale;
    if !(64..=MAX_COORD / 16).contains(&scale) {
        return Err(GenError::InvalidParameters(format!("coordinate_scale {scale} outside [64, 2^26]")));
    }
    if spec.n0 < 3 || spec.n1 < 3 {
        return Err(GenError::InvalidParameters("each polygon needs at least 3 corners".into()));
    }
    if spec.regime == Regime::DisjointPolygonsOverlappingHulls {
        return interleaved_combs(spec);
    }
    if (spec.n0.max(spec.n1) as i64) * 16 > scale {
        return Err(GenError::InvalidParameters(format!(
            "coordinate_scale {scale} too small for {} corners",
            spec.n0.max(spec.n1)
        )));
    }

    let mut rng = rng_for(spec.seed);
    let origin = Point::new(0, 0).expect("origin");
    let (r0_min, r0_max) = (scale as f64 / 2.0, scale as f64);
    for _ in 0..MAX_ATTEMPTS {
        let Ok(p0) = draw_star(&mut rng, spec.n0, origin, r0_min, r0_max) else { continue };
        let phi = rng.gen_range(0.0..TAU);
        let r1_max = rng.gen_range(0.5..1.5) * scale as f64;
        let r1_min = r1_max / 2.0;
        let candidate = match spec.regime {
            Regime::DisjointHulls => {
                let d = r0_max + r1_max + rng.gen_range(0.05..1.0) * scale as f64;
                let c1 = point(d * phi.cos(), d * phi.sin())?;
                draw_star(&mut rng, spec.n1, c1, r1_min, r1_max).ok()
            }
            Regime::IntersectingHulls => {
                let d = rng.gen_range(0.0..(r0_max + r1_max) * 0.9);
                let c1 = point(d * phi.cos(), d * phi.sin())?;
                draw_star(&mut rng, spec.n1, c1, r1_min, r1_max).ok().filter(|p1| hull_boundaries_cross(&p0, p1))
            }
            Regime::NestedHulls => {
                let r_in = inscribed_radius(&p0, origin);
                if r_in < scale as f64 / 16.0 {
                    continue;
                }
                let (lo, hi) = (r_in * 0.3, r_in * 0.6);
                let d = rng.gen_range(0.0..r_in * 0.3);
                let c1 = point(d * phi.cos(), d * phi.sin())?;
                draw_star(&mut rng, spec.n1, c1, lo, hi).ok()
            }
            Regime::DisjointPolygonsOverlappingHulls => unreachable!(),
        };
        let Some(p1) = candidate else { continue };
        if pair_in_general_position(&p0, &p1) {
            return Ok((p0, p1));
        }
    }
    Err(GenError::BudgetExhausted(MAX_ATTEMPTS))
}

/// Hulls intersect and neither contains the other. Uses the brute-force
/// hull test, so only affordable for desk-scale inputs; larger inputs fall
/// back to "hulls not disjoint".
fn hull_boundaries_cross(p0: &Polygon, p1: &Polygon) -> bool {
    if hulls_disjoint_bruteforce(p0, p1) {
        return false;
    }
    if p0.len() + p1.len() > FULL_VALIDATION_LIMIT {
        return true;
    }
    let (Ok(h0), Ok(h1)) = (crate::oracle::convex_hull(p0), crate::oracle::convex_hull(p1)) else {
        return false;
    };
    !(h1.corners.iter().all(|&p| h0.contains(p)) || h0.corners.iter().all(|&p| h1.contains(p)))
}

/// Builds one comb with `teeth` teeth pointing in +x and `extra` additional
/// corners bulging out of the back of its spine, counterclockwise.
///
/// `slots` lists the teeth's vertical slot numbers in increasing order; slot
/// `j` occupies `y` in `[4j + 1, 4j + 3]` units.
fn comb(slots: &[usize], extra: usize, back: f64, spine: f64, tip: f64, unit: f64) -> Vec<(f64, f64)> {
    let bottom = |j: usize| (4 * j + 1) as f64 * unit;
    let top = |j: usize| (4 * j + 3) as f64 * unit;
    let mut out = Vec::with_capacity(4 * slots.len() + extra);
    let first = slots[0];
    let last = *slots.last().expect("at least one tooth");
    out.push((back, bottom(first)));
    for (idx, &j) in slots.iter().enumerate() {
        if idx > 0 {
            out.push((spine, bottom(j)));
        }
        out.push((tip, bottom(j)));
        out.push((tip, top(j)));
        if idx + 1 < slots.len() {
            out.push((spine, top(j)));
        }
    }
    out.push((back, top(last)));
    // Outward bulge on the back edge, running back down.
    let (y_hi, y_lo) = (top(last), bottom(first));
    for e in 1..=extra {
        let f = e as f64 / (extra + 1) as f64;
        let y = y_hi + (y_lo - y_hi) * f;
        let bulge = unit * (0.5 + 2.0 * f * (1.0 - f));
        out.push((back - bulge, y));
    }
    out
}

/// Two disjoint combs whose teeth interleave, so each convex hull reaches
/// into the other: the pathological input for the outer-tangent loop.
///
/// Each polygon gets `n / 4` teeth (at least one) plus `n % 4` corners on the
/// back of its spine. One polygon needs at least two teeth, so
/// `max(n0, n1) >= 8`.
pub fn interleaved_combs(spec: &GenSpec) -> Result<(Polygon, Polygon), GenError> {
    let (k0, k1) = (spec.n0 / 4, spec.n1 / 4);
    if k0 == 0 || k1 == 0 || k0.max(k1) < 2 {
        return Err(GenError::InvalidParameters(format!(
            "interleaved combs need n0, n1 >= 4 and max(n0, n1) >= 8, got {}, {}",
            spec.n0, spec.n1
        )));
    }
    let slots = k0 + k1;
    let unit = spec.coordinate_scale as f64 / (4 * slots + 8) as f64;
    if unit < 64.0 {
        return Err(GenError::InvalidParameters("coordinate_scale too small for this many teeth".into()));
    }

    // Interleave starting with the comb that has more teeth.
    let mut owner = Vec::with_capacity(slots);
    let (mut left, mut right) = (k0, k1);
    let mut turn = if k0 >= k1 { 0 } else { 1 };
    while left + right > 0 {
        if (turn == 0 && left > 0) || right == 0 {
            owner.push(0);
            left -= 1;
        } else {
            owner.push(1);
            right -= 1;
        }
        turn = 1 - turn;
    }
    let slots0: Vec<usize> = (0..slots).filter(|&j| owner[j] == 0).collect();
    let slots1: Vec<usize> = (0..slots).filter(|&j| owner[j] == 1).collect();

    let width = spec.coordinate_scale as f64;
    let (spine_w, gap) = (2.0 * unit, 2.0 * unit);
    // P0: spine on the left, teeth to the right. P1 is built the same way
    // and mirrored so its spine is on the right.
    let shape0 = comb(&slots0, spec.n0 % 4, 0.0, spine_w, width - spine_w - gap, unit);
    let shape1: Vec<(f64, f64)> = comb(&slots1, spec.n1 % 4, 0.0, spine_w, width - spine_w - gap, unit)
        .into_iter()
        .map(|(x, y)| (width - x, y))
        .rev()
        .collect();

    let mut rng = rng_for(spec.seed);
    let jitter = unit / 8.0;
    for _ in 0..MAX_ATTEMPTS {
        let phi = rng.gen_range(0.0..TAU);
        let (sin, cos) = phi.sin_cos();
        let mut place = |shape: &[(f64, f64)]| -> Result<Vec<Point>, GenError> {
            shape
                .iter()
                .map(|&(x, y)| {
                    let (x, y) = (x + rng.gen_range(-jitter..=jitter), y + rng.gen_range(-jitter..=jitter));
                    point(x * cos - y * sin, x * sin + y * cos)
                })
                .collect()
        };
        let (c0, c1) = (place(&shape0)?, place(&shape1)?);
        let start0 = rng.gen_range(0..c0.len());
        let start1 = rng.gen_range(0..c1.len());
        let rotate = |mut v: Vec<Point>, k: usize| {
            v.rotate_left(k);
            v
        };
        let (Ok(p0), Ok(p1)) = (Polygon::new(rotate(c0, start0)), Polygon::new(rotate(c1, start1))) else {
            continue;
        };
        if p0.orientation() != crate::polygon::Orientation::CounterClockwise
            || p1.orientation() != crate::polygon::Orientation::CounterClockwise
        {
            return Err(GenError::InvalidParameters("comb template produced clockwise output".into()));
        }
        if pair_in_general_position(&p0, &p1) && polygons_disjoint(&p0, &p1) && !hulls_disjoint_bruteforce(&p0, &p1) {
            return Ok((p0, p1));
        }
    }
    Err(GenError::BudgetExhausted(MAX_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{classify_all_corner_pairs, hulls_disjoint_bruteforce, polygons_disjoint};

    fn origin() -> Point {
        Point::new(0, 0).unwrap()
    }

    #[test]
    fn triangle_contains_center() {
        for seed in 0..20 {
            let t = random_star_polygon(seed, 3, origin(), 100, 200).unwrap();
            assert_eq!(t.len(), 3);
            assert!(crate::oracle::polygon_contains(&t, origin()));
            assert!(is_star_around(&t, origin()));
        }
    }

    #[test]
    fn star_is_deterministic() {
        let a = random_star_polygon(42, 17, origin(), 100, 200).unwrap();
        let b = random_star_polygon(42, 17, origin(), 100, 200).unwrap();
        assert_eq!(a, b);
        let c = random_star_polygon(43, 17, origin(), 100, 200).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn star_64_is_valid() {
        let s = random_star_polygon(7, 64, origin(), 100, 200).unwrap();
        assert!(is_simple(&s));
        assert!(collinear_free(s.corners()));
        assert_eq!(s.orientation(), crate::polygon::Orientation::CounterClockwise);
    }

    #[test]
    fn star_param_errors() {
        assert!(matches!(random_star_polygon(0, 2, origin(), 1, 2), Err(GenError::InvalidParameters(_))));
        assert!(matches!(random_star_polygon(0, 5, origin(), 5, 5), Err(GenError::InvalidParameters(_))));
        // Far too many corners for the radius: every draw collides.
        assert!(random_star_polygon(0, 64, origin(), 1, 2).is_err());
    }

    #[test]
    fn star_check_rejects_double_winding() {
        // Pentagram: each step turns left around the origin but winds twice.
        let pentagram = Polygon::from_coords(&[(100, 0), (-81, 59), (31, -95), (31, 95), (-81, -59)]);
        assert!(!is_star_around(&pentagram, origin()));
        let pentagon = Polygon::from_coords(&[(100, 0), (31, 95), (-81, 59), (-81, -59), (31, -95)]);
        assert!(is_star_around(&pentagon, origin()));
    }

    #[test]
    fn regimes_hold_on_small_instances() {
        for seed in 0..10 {
            let spec = GenSpec::new(seed, 8, 8, Regime::DisjointHulls);
            let (a, b) = generate_pair(&spec).unwrap();
            assert!(classify_all_corner_pairs(&a, &b).unwrap().hulls_disjoint);

            let spec = GenSpec::new(seed, 8, 8, Regime::NestedHulls);
            let (a, b) = generate_pair(&spec).unwrap();
            let r = classify_all_corner_pairs(&a, &b).unwrap();
            assert!(r.separating_pairs.is_empty() && r.outer_pairs.is_empty() && !r.hulls_disjoint);

            let spec = GenSpec::new(seed, 8, 8, Regime::IntersectingHulls);
            let (a, b) = generate_pair(&spec).unwrap();
            assert!(!classify_all_corner_pairs(&a, &b).unwrap().hulls_disjoint);

            let spec = GenSpec::new(seed, 9, 14, Regime::DisjointPolygonsOverlappingHulls);
            let (a, b) = generate_pair(&spec).unwrap();
            assert_eq!((a.len(), b.len()), (9, 14));
            assert!(polygons_disjoint(&a, &b));
            assert!(!hulls_disjoint_bruteforce(&a, &b));
            assert!(check_general_position(&a, &b).is_clean());
        }
    }

    #[test]
    fn pair_is_deterministic() {
        for regime in Regime::ALL {
            let spec = GenSpec::new(99, 12, 10, regime);
            assert_eq!(generate_pair(&spec).unwrap(), generate_pair(&spec).unwrap());
        }
    }

    #[test]
    fn regime_names_round_trip() {
        for r in Regime::ALL {
            assert_eq!(r.as_str().parse::<Regime>().unwrap(), r);
        }
        assert!("sideways".parse::<Regime>().is_err());
    }

    #[test]
    fn comb_size_errors() {
        let spec = GenSpec::new(1, 4, 7, Regime::DisjointPolygonsOverlappingHulls);
        assert!(matches!(generate_pair(&spec), Err(GenError::InvalidParameters(_))));
        let spec = GenSpec::new(1, 3, 12, Regime::DisjointPolygonsOverlappingHulls);
        assert!(generate_pair(&spec).is_err());
        let spec = GenSpec::new(1, 4, 8, Regime::DisjointPolygonsOverlappingHulls);
        assert!(generate_pair(&spec).is_ok());
    }

    #[test]
    fn large_star_pairs_are_cheap_and_star_shaped() {
        let spec = GenSpec::new(5, 1 << 12, 1 << 12, Regime::DisjointHulls);
        let (a, b) = generate_pair(&spec).unwrap();
        assert_eq!(a.len(), 4096);
        assert!(is_star_around(&a, origin()));
        assert!(hulls_disjoint_bruteforce(&a, &b));
    }
}
