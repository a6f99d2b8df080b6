//! Separating and outer common tangents of two simple polygons.
//!
//! Both algorithms keep a *temporary line* through one corner of each
//! polygon, `(s0, s1)`, and walk the two corner sequences in lockstep with
//! the cursors `t0`, `t1`. Whenever the corner under a cursor lies strictly
//! on the wrong side of the temporary line, the line is rotated onto that
//! corner and the other polygon's cursor restarts just after its own pivot.
//!
//! The working state is the five indices of [`AlgState`] plus the counters
//! of [`RunStats`]; corners are read only through [`PolygonView::corner`].
//! Indices grow past `n` exactly as the loop bounds require and are reduced
//! modulo `n` only in the returned [`TangentResult`].
//!
//! The cursors take turns, except that a polygon whose cursor has already
//! reached its loop bound gives up its turn. Every iteration therefore
//! advances a cursor that is still below its bound, which is what the
//! iteration bounds `5(n0 + n1)` and `4(n0 + n1)` count.

use serde::Serialize;
use thiserror::Error;

use crate::geom::{orient, Point, Sign};
use crate::polygon::{Orientation, Oriented, PolygonView, Reversed};

/// Loop variables of either algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgState {
    pub s: [usize; 2],
    pub t: [usize; 2],
    /// Polygon whose cursor is traversed next.
    pub u: usize,
}

impl AlgState {
    fn initial() -> Self {
        AlgState { s: [0, 0], t: [1, 1], u: 0 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    /// Executions of the loop body.
    pub iterations: u64,
    /// Calls to `corner()`, including the verification sweep where one runs.
    pub corner_reads: u64,
    /// Times the temporary line was rotated onto a new corner.
    pub updates: u64,
    /// Side tests of a corner other than the polygon's own pivot that
    /// evaluated to zero. Non-zero means the input was not in general
    /// position and the result carries no correctness guarantee.
    pub degenerate_tests: u64,
}

impl RunStats {
    pub fn general_position_violated(&self) -> bool {
        self.degenerate_tests > 0
    }
}

/// One loop iteration as seen by a [`TraceSink`].
///
/// `state` holds the pivots after any update of this iteration and the
/// cursor `t[u]` that was tested, before it is advanced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub iteration: u64,
    pub state: AlgState,
    pub updated: bool,
}

/// Streaming observer of a run. Implementations decide what, if anything,
/// to keep; the algorithms themselves store nothing per iteration.
pub trait TraceSink {
    fn record(&mut self, step: &TraceStep);
}

/// Sink that drops every record.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoTrace;

impl TraceSink for NoTrace {
    #[inline]
    fn record(&mut self, _step: &TraceStep) {}
}

impl<F: FnMut(&TraceStep)> TraceSink for F {
    fn record(&mut self, step: &TraceStep) {
        self(step)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TangentKind {
    Separating,
    Outer,
}

impl TangentKind {
    /// Iteration bound of the loop: `5(n0 + n1)` for the separating
    /// algorithm and `4(n0 + n1)` for the outer one.
    pub fn iteration_bound(self, n0: usize, n1: usize) -> u64 {
        let n = (n0 + n1) as u64;
        match self {
            TangentKind::Separating => 5 * n,
            TangentKind::Outer => 4 * n,
        }
    }

    /// Corner-read bound: three reads per iteration, plus the side check
    /// over all corners for the outer algorithm, plus a constant.
    pub fn read_bound(self, n0: usize, n1: usize) -> u64 {
        let n = (n0 + n1) as u64;
        match self {
            TangentKind::Separating => 15 * n + 16,
            TangentKind::Outer => 12 * n + n + 16,
        }
    }
}

/// Which of the four tangent operations produced a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Separating,
    SecondSeparating,
    Outer,
    SecondOuter,
}

impl Variant {
    pub const ALL: [Variant; 4] =
        [Variant::Separating, Variant::SecondSeparating, Variant::Outer, Variant::SecondOuter];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Separating => "separating",
            Variant::SecondSeparating => "second_separating",
            Variant::Outer => "outer",
            Variant::SecondOuter => "second_outer",
        }
    }

    pub fn kind(self) -> TangentKind {
        match self {
            Variant::Separating | Variant::SecondSeparating => TangentKind::Separating,
            Variant::Outer | Variant::SecondOuter => TangentKind::Outer,
        }
    }

    /// Maps the pivots of an algorithm state to `(P0 index, P1 index)` of
    /// the caller's polygons, reduced mod `n`.
    ///
    /// The second tangents run over reversed views (and, for the outer one,
    /// with the polygons swapped), so their raw trace indices live in that
    /// mirrored space.
    pub fn pivots(self, state: &AlgState, n0: usize, n1: usize) -> (usize, usize) {
        let back = |i: usize, n: usize| (n - i % n) % n;
        match self {
            Variant::Separating | Variant::Outer => (state.s[0] % n0, state.s[1] % n1),
            Variant::SecondSeparating => (back(state.s[0], n0), back(state.s[1], n1)),
            Variant::SecondOuter => (back(state.s[1], n0), back(state.s[0], n1)),
        }
    }
}

/// A common tangent through corner `s0` of `P0` and corner `s1` of `P1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TangentResult {
    pub s0: usize,
    pub s1: usize,
    pub kind: TangentKind,
    /// Counters of the tangent loop itself (and, for outer tangents, the
    /// side check).
    pub stats: RunStats,
    /// Counters of the hull-disjointness check run before an outer tangent
    /// loop; `None` for separating tangents.
    pub precheck: Option<RunStats>,
}

impl TangentResult {
    /// Unordered corner pair, the canonical form used for comparisons.
    pub fn pair(&self) -> (usize, usize) {
        (self.s0, self.s1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separation {
    Tangent(TangentResult),
    /// The convex hulls of the polygons intersect.
    NotSeparable(RunStats),
}

impl Separation {
    pub fn tangent(&self) -> Option<&TangentResult> {
        match self {
            Separation::Tangent(t) => Some(t),
            Separation::NotSeparable(_) => None,
        }
    }

    pub fn stats(&self) -> &RunStats {
        match self {
            Separation::Tangent(t) => &t.stats,
            Separation::NotSeparable(s) => s,
        }
    }
}

/// Why an outer tangent could not be certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Uncertainty {
    /// The hull-disjointness check found intersecting convex hulls.
    HullsIntersect,
    /// The final line failed the side check over all corners.
    SideCheckFailed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OuterTangent {
    Tangent(TangentResult),
    /// The convex hulls are not disjoint, so the loop carries no guarantee.
    /// `s0`, `s1` are its final pivots, reported for inspection only.
    PreconditionUncertain {
        s0: usize,
        s1: usize,
        stats: RunStats,
        precheck: RunStats,
        reason: Uncertainty,
    },
}

impl OuterTangent {
    pub fn tangent(&self) -> Option<&TangentResult> {
        match self {
            OuterTangent::Tangent(t) => Some(t),
            OuterTangent::PreconditionUncertain { .. } => None,
        }
    }

    pub fn stats(&self) -> &RunStats {
        match self {
            OuterTangent::Tangent(t) => &t.stats,
            OuterTangent::PreconditionUncertain { stats, .. } => stats,
        }
    }

    /// Counters of the hull-disjointness check that precedes the loop.
    pub fn precheck(&self) -> &RunStats {
        match self {
            OuterTangent::Tangent(t) => t.precheck.as_ref().expect("outer results carry precheck counters"),
            OuterTangent::PreconditionUncertain { precheck, .. } => precheck,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TangentError {
    #[error("P{polygon} must be given in {expected} order")]
    OrientationMismatch { polygon: u8, expected: Orientation },
}

fn require<V: PolygonView + ?Sized>(poly: &V, polygon: u8, expected: Orientation) -> Result<(), TangentError> {
    if poly.orientation() == expected {
        Ok(())
    } else {
        Err(TangentError::OrientationMismatch { polygon, expected })
    }
}

/// Both polygons behind one indexed read, counting every access.
struct Reader<'a, A: ?Sized, B: ?Sized> {
    p0: &'a A,
    p1: &'a B,
    reads: u64,
}

impl<A: PolygonView + ?Sized, B: PolygonView + ?Sized> Reader<'_, A, B> {
    #[inline]
    fn corner(&mut self, k: usize, i: usize) -> Point {
        self.reads += 1;
        if k == 0 {
            self.p0.corner(i)
        } else {
            self.p1.corner(i)
        }
    }
}

/// Core of the separating algorithm. A corner is on the wrong side when the
/// side test equals `wrong_side`: `Positive` for counterclockwise input, and
/// `Negative` for the mirrored run over clockwise input.
fn separating_run<A, B, S>(p0: &A, p1: &B, wrong_side: Sign, sink: &mut S) -> (Option<[usize; 2]>, RunStats)
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
    S: TraceSink + ?Sized,
{
    let n = [p0.len(), p1.len()];
    let bound = [3 * n[0], 3 * n[1]];
    let mut rd = Reader { p0, p1, reads: 0 };
    let mut st = AlgState::initial();
    let mut stats = RunStats::default();

    while st.t[0] < bound[0] || st.t[1] < bound[1] {
        if st.t[st.u] >= bound[st.u] {
            st.u = 1 - st.u;
        }
        let u = st.u;
        let v = 1 - u;
        let side = orient(rd.corner(v, st.s[v]), rd.corner(u, st.s[u]), rd.corner(u, st.t[u]));
        stats.iterations += 1;
        // The cursor coming round to the pivot itself is not a degeneracy.
        if side == Sign::Zero && st.t[u] % n[u] != st.s[u] % n[u] {
            stats.degenerate_tests += 1;
        }
        let updated = side == wrong_side;
        if updated {
            if st.t[u] >= 2 * n[u] {
                stats.corner_reads = rd.reads;
                sink.record(&TraceStep { iteration: stats.iterations - 1, state: st, updated: false });
                return (None, stats);
            }
            st.s[u] = st.t[u];
            st.t[v] = st.s[v] + 1;
            stats.updates += 1;
        }
        sink.record(&TraceStep { iteration: stats.iterations - 1, state: st, updated });
        st.t[u] += 1;
        st.u = v;
    }
    stats.corner_reads = rd.reads;
    (Some(st.s), stats)
}

/// Core of the outer algorithm for `p0` counterclockwise and `p1` clockwise.
/// Runs the loop and then the side check over every corner of both polygons.
fn outer_run<A, B, S>(p0: &A, p1: &B, sink: &mut S) -> ([usize; 2], bool, RunStats)
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
    S: TraceSink + ?Sized,
{
    let n = [p0.len(), p1.len()];
    let bound = [2 * n[0], 2 * n[1]];
    let mut rd = Reader { p0, p1, reads: 0 };
    let mut st = AlgState::initial();
    let mut stats = RunStats::default();

    while st.t[0] < bound[0] || st.t[1] < bound[1] {
        if st.t[st.u] >= bound[st.u] {
            st.u = 1 - st.u;
        }
        let u = st.u;
        let v = 1 - u;
        let side = orient(rd.corner(0, st.s[0]), rd.corner(1, st.s[1]), rd.corner(u, st.t[u]));
        stats.iterations += 1;
        // The cursor coming round to the pivot itself is not a degeneracy.
        if side == Sign::Zero && st.t[u] % n[u] != st.s[u] % n[u] {
            stats.degenerate_tests += 1;
        }
        let updated = side == Sign::Positive;
        if updated {
            st.s[u] = st.t[u];
            st.t[v] = st.s[v] + 1;
            stats.updates += 1;
        }
        sink.record(&TraceStep { iteration: stats.iterations - 1, state: st, updated });
        st.t[u] += 1;
        st.u = v;
    }

    let a = rd.corner(0, st.s[0]);
    let b = rd.corner(1, st.s[1]);
    let mut certified = true;
    for (k, &len) in n.iter().enumerate() {
        for i in 0..len {
            if orient(a, b, rd.corner(k, i)) == Sign::Positive {
                certified = false;
            }
        }
    }
    stats.corner_reads = rd.reads;
    (st.s, certified, stats)
}

/// Separating common tangent of two counterclockwise polygons.
///
/// On success `P_k` lies in the closed right half-plane of the line from
/// `P_{1-k}[s_{1-k}]` to `P_k[s_k]`, for `k = 0, 1`. Returns
/// [`Separation::NotSeparable`] exactly when the convex hulls intersect.
pub fn separating_common_tangent<A, B>(p0: &A, p1: &B) -> Result<Separation, TangentError>
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    separating_common_tangent_traced(p0, p1, &mut NoTrace)
}

pub fn separating_common_tangent_traced<A, B, S>(p0: &A, p1: &B, sink: &mut S) -> Result<Separation, TangentError>
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
    S: TraceSink + ?Sized,
{
    require(p0, 0, Orientation::CounterClockwise)?;
    require(p1, 1, Orientation::CounterClockwise)?;
    Ok(match separating_run(p0, p1, Sign::Positive, sink) {
        (Some(s), stats) => Separation::Tangent(TangentResult {
            s0: s[0] % p0.len(),
            s1: s[1] % p1.len(),
            kind: TangentKind::Separating,
            stats,
            precheck: None,
        }),
        (None, stats) => Separation::NotSeparable(stats),
    })
}

/// The other separating common tangent: `P_k` lies in the closed *left*
/// half-plane of the line from `P_{1-k}[s_{1-k}]` to `P_k[s_k]`.
///
/// Runs the separating loop over both polygons reversed, rotating on
/// corners strictly to the right instead of the left.
pub fn second_separating_tangent<A, B>(p0: &A, p1: &B) -> Result<Separation, TangentError>
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    second_separating_tangent_traced(p0, p1, &mut NoTrace)
}

/// Trace indices refer to the reversed views; see [`Variant::pivots`].
pub fn second_separating_tangent_traced<A, B, S>(p0: &A, p1: &B, sink: &mut S) -> Result<Separation, TangentError>
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
    S: TraceSink + ?Sized,
{
    require(p0, 0, Orientation::CounterClockwise)?;
    require(p1, 1, Orientation::CounterClockwise)?;
    let (r0, r1) = (Reversed::new(p0), Reversed::new(p1));
    Ok(match separating_run(&r0, &r1, Sign::Negative, sink) {
        (Some(s), stats) => Separation::Tangent(TangentResult {
            s0: r0.original_index(s[0]),
            s1: r1.original_index(s[1]),
            kind: TangentKind::Separating,
            stats,
            precheck: None,
        }),
        (None, stats) => Separation::NotSeparable(stats),
    })
}

/// Outer common tangent of a counterclockwise `p0` and a clockwise `p1`
/// whose convex hulls are disjoint: both polygons lie in the closed right
/// half-plane of the line from `P0[s0]` to `P1[s1]`.
///
/// The hull precondition is checked first with the separating loop, which
/// is linear and needs no extra storage; its counters are kept apart in
/// [`TangentResult::precheck`]. The loop's final line is then checked
/// against every corner of both polygons. If either check fails the result
/// is [`OuterTangent::PreconditionUncertain`].
pub fn outer_common_tangent<A, B>(p0: &A, p1: &B) -> Result<OuterTangent, TangentError>
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    outer_common_tangent_traced(p0, p1, &mut NoTrace)
}

pub fn outer_common_tangent_traced<A, B, S>(p0: &A, p1: &B, sink: &mut S) -> Result<OuterTangent, TangentError>
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
    S: TraceSink + ?Sized,
{
    require(p0, 0, Orientation::CounterClockwise)?;
    require(p1, 1, Orientation::Clockwise)?;
    let (disjoint, precheck) = outer_precheck(p0, p1);
    let (s, certified, stats) = outer_run(p0, p1, sink);
    Ok(outer_outcome(s[0] % p0.len(), s[1] % p1.len(), disjoint, certified, stats, precheck))
}

/// The other outer common tangent: both polygons lie in the closed *left*
/// half-plane of the line from `P0[s0]` to `P1[s1]`.
///
/// Runs the outer loop with the reversed `p1` (now counterclockwise) in the
/// first role and the reversed `p0` (now clockwise) in the second.
pub fn second_outer_tangent<A, B>(p0: &A, p1: &B) -> Result<OuterTangent, TangentError>
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    second_outer_tangent_traced(p0, p1, &mut NoTrace)
}

/// Trace indices refer to the swapped, reversed views; see [`Variant::pivots`].
pub fn second_outer_tangent_traced<A, B, S>(p0: &A, p1: &B, sink: &mut S) -> Result<OuterTangent, TangentError>
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
    S: TraceSink + ?Sized,
{
    require(p0, 0, Orientation::CounterClockwise)?;
    require(p1, 1, Orientation::Clockwise)?;
    let (disjoint, precheck) = outer_precheck(p0, p1);
    let (r0, r1) = (Reversed::new(p0), Reversed::new(p1));
    let (s, certified, stats) = outer_run(&r1, &r0, sink);
    Ok(outer_outcome(r0.original_index(s[1]), r1.original_index(s[0]), disjoint, certified, stats, precheck))
}

/// Hull-disjointness of a counterclockwise `p0` and a clockwise `p1`.
fn outer_precheck<A, B>(p0: &A, p1: &B) -> (bool, RunStats)
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    let (found, stats) = separating_run(p0, &Reversed::new(p1), Sign::Positive, &mut NoTrace);
    (found.is_some(), stats)
}

fn outer_outcome(
    s0: usize,
    s1: usize,
    disjoint: bool,
    certified: bool,
    stats: RunStats,
    precheck: RunStats,
) -> OuterTangent {
    match (disjoint, certified) {
        (true, true) => {
            OuterTangent::Tangent(TangentResult { s0, s1, kind: TangentKind::Outer, stats, precheck: Some(precheck) })
        }
        (false, _) => {
            OuterTangent::PreconditionUncertain { s0, s1, stats, precheck, reason: Uncertainty::HullsIntersect }
        }
        (true, false) => {
            OuterTangent::PreconditionUncertain { s0, s1, stats, precheck, reason: Uncertainty::SideCheckFailed }
        }
    }
}

/// Whether the convex hulls of two polygons are disjoint, in linear time
/// and constant workspace. Either polygon may be given in either order.
pub fn hulls_disjoint<A, B>(p0: &A, p1: &B) -> bool
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    let a = Oriented::new(p0, Orientation::CounterClockwise);
    let b = Oriented::new(p1, Orientation::CounterClockwise);
    separating_run(&a, &b, Sign::Positive, &mut NoTrace).0.is_some()
}

/// Exhaustive side check of a returned tangent, linear in `n0 + n1`.
///
/// For [`Variant::Separating`] this is `P_k ⊂ RHP(P_{1-k}[s_{1-k}], P_k[s_k])`,
/// for [`Variant::Outer`] both polygons in `RHP(P0[s0], P1[s1])`, and the
/// second variants are the same with left and right exchanged.
pub fn certify<A, B>(p0: &A, p1: &B, variant: Variant, s0: usize, s1: usize) -> bool
where
    A: PolygonView + ?Sized,
    B: PolygonView + ?Sized,
{
    let (a, b) = (p0.corner(s0), p1.corner(s1));
    let forbidden = match variant {
        Variant::Separating | Variant::Outer => Sign::Positive,
        Variant::SecondSeparating | Variant::SecondOuter => Sign::Negative,
    };
    match variant.kind() {
        // P1 against the line P0 -> P1; P0 against the line P1 -> P0.
        TangentKind::Separating => {
            (0..p1.len()).all(|i| orient(a, b, p1.corner(i)) != forbidden)
                && (0..p0.len()).all(|i| orient(b, a, p0.corner(i)) != forbidden)
        }
        TangentKind::Outer => {
            (0..p0.len()).all(|i| orient(a, b, p0.corner(i)) != forbidden)
                && (0..p1.len()).all(|i| orient(a, b, p1.corner(i)) != forbidden)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{generate_pair, random_star_polygon, GenSpec, Regime};
    use crate::oracle::{classify_all_corner_pairs, classify_corner_pairs_closed, same_line};
    use crate::polygon::{check_general_position, Polygon};

    fn squares() -> (Polygon, Polygon) {
        (
            Polygon::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)]),
            Polygon::from_coords(&[(3, 0), (4, 0), (4, 1), (3, 1)]),
        )
    }

    fn nested() -> (Polygon, Polygon) {
        (Polygon::from_coords(&[(0, 0), (10, 0), (5, 5)]), Polygon::from_coords(&[(4, 1), (6, 1), (5, 2)]))
    }

    #[test]
    fn two_squares_separating() {
        let (a, b) = squares();
        let oracle = classify_corner_pairs_closed(&a, &b);
        let first = separating_common_tangent(&a, &b).unwrap();
        let second = second_separating_tangent(&a, &b).unwrap();
        let (t1, t2) = (first.tangent().unwrap(), second.tangent().unwrap());
        assert!(certify(&a, &b, Variant::Separating, t1.s0, t1.s1));
        assert!(certify(&a, &b, Variant::SecondSeparating, t2.s0, t2.s1));
        assert_ne!(t1.pair(), t2.pair());
        let found: std::collections::BTreeSet<_> = [t1.pair(), t2.pair()].into_iter().collect();
        assert_eq!(found, oracle.separating_pairs);
    }

    #[test]
    fn two_squares_outer() {
        let (a, b) = squares();
        let b_cw = b.to_reversed();
        let first = outer_common_tangent(&a, &b_cw).unwrap();
        let second = second_outer_tangent(&a, &b_cw).unwrap();
        let (t1, t2) = (first.tangent().unwrap(), second.tangent().unwrap());
        assert!(certify(&a, &b_cw, Variant::Outer, t1.s0, t1.s1));
        assert!(certify(&a, &b_cw, Variant::SecondOuter, t2.s0, t2.s1));
        // One result on y = 0, the other on y = 1.
        let ys = |t: &TangentResult| (a.corner(t.s0).y(), b_cw.corner(t.s1).y());
        let mut lines = [ys(t1), ys(t2)];
        lines.sort();
        assert_eq!(lines, [(0, 0), (1, 1)]);
        assert!(!same_line(&a, &b_cw, t1.pair(), t2.pair()));
    }

    #[test]
    fn nested_triangles_are_not_separable() {
        let (a, b) = nested();
        assert!(matches!(separating_common_tangent(&a, &b).unwrap(), Separation::NotSeparable(_)));
        assert!(matches!(second_separating_tangent(&a, &b).unwrap(), Separation::NotSeparable(_)));
        assert!(!hulls_disjoint(&a, &b));
        let b_cw = b.to_reversed();
        match outer_common_tangent(&a, &b_cw).unwrap() {
            OuterTangent::PreconditionUncertain { reason, .. } => assert_eq!(reason, Uncertainty::HullsIntersect),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn orientation_is_checked() {
        let (a, b) = squares();
        assert_eq!(
            separating_common_tangent(&a, &b.to_reversed()),
            Err(TangentError::OrientationMismatch { polygon: 1, expected: Orientation::CounterClockwise })
        );
        assert_eq!(
            outer_common_tangent(&a, &b),
            Err(TangentError::OrientationMismatch { polygon: 1, expected: Orientation::Clockwise })
        );
        assert!(second_outer_tangent(&a.to_reversed(), &b.to_reversed()).is_err());
    }

    #[test]
    fn far_translated_triangles_outer() {
        let a = Polygon::from_coords(&[(0, 0), (4, 0), (1, 3)]);
        let b = Polygon::from_coords(&[(1000, 501), (1004, 501), (1001, 504)]).to_reversed();
        for r in [outer_common_tangent(&a, &b).unwrap(), second_outer_tangent(&a, &b).unwrap()] {
            let t = r.tangent().expect("hulls are disjoint");
            assert!(t.stats.iterations <= 24);
            assert!(r.precheck().iterations <= 30);
        }
        let oracle = classify_all_corner_pairs(&a, &b).unwrap();
        let t1 = outer_common_tangent(&a, &b).unwrap().tangent().unwrap().pair();
        let t2 = second_outer_tangent(&a, &b).unwrap().tangent().unwrap().pair();
        assert_eq!([t1, t2].into_iter().collect::<std::collections::BTreeSet<_>>(), oracle.outer_pairs);
    }

    #[test]
    fn stars_match_oracle_within_bounds() {
        for seed in 0..20 {
            let spec = GenSpec::new(seed, 32, 32, Regime::DisjointHulls);
            let (a, b) = generate_pair(&spec).unwrap();
            let oracle = classify_all_corner_pairs(&a, &b).unwrap();
            let first = separating_common_tangent(&a, &b).unwrap();
            let t = first.tangent().unwrap();
            assert!(oracle.separating_pairs.contains(&t.pair()));
            assert!(t.stats.iterations <= 5 * 64);
        }
    }

    #[test]
    fn trace_is_monotone_and_consistent() {
        for (seed, n0, n1) in [(1, 3, 64), (2, 64, 3), (3, 20, 20), (4, 7, 50)] {
            let (a, b) = generate_pair(&GenSpec::new(seed, n0, n1, Regime::DisjointHulls)).unwrap();
            let mut last = [0usize; 2];
            let mut steps = 0u64;
            let mut updates = 0u64;
            let mut sink = |step: &TraceStep| {
                assert_eq!(step.iteration, steps);
                steps += 1;
                updates += step.updated as u64;
                for k in 0..2 {
                    assert!(step.state.s[k] >= last[k]);
                    assert!(step.state.s[k] < 2 * [n0, n1][k]);
                }
                last = step.state.s;
            };
            let r = separating_common_tangent_traced(&a, &b, &mut sink).unwrap();
            assert_eq!(r.stats().iterations, steps);
            assert_eq!(r.stats().updates, updates);
            assert!(r.stats().corner_reads <= 3 * steps);
        }
    }

    #[test]
    fn unbalanced_sizes_respect_bounds() {
        for regime in Regime::ALL {
            for seed in 0..30 {
                for (n0, n1) in [(3, 64), (64, 3), (4, 61), (60, 8)] {
                    let Ok((a, b)) = generate_pair(&GenSpec::new(seed, n0, n1, regime)) else { continue };
                    let s = *separating_common_tangent(&a, &b).unwrap().stats();
                    assert!(s.iterations <= TangentKind::Separating.iteration_bound(n0, n1));
                    let o = outer_common_tangent(&a, &b.to_reversed()).unwrap();
                    assert!(o.stats().iterations <= TangentKind::Outer.iteration_bound(n0, n1));
                    assert!(o.stats().corner_reads <= TangentKind::Outer.read_bound(n0, n1));
                }
            }
        }
    }

    #[test]
    fn initial_line_already_tangent() {
        let a = Polygon::from_coords(&[(0, 0), (1, 4), (-3, 2)]);
        let b = Polygon::from_coords(&[(10, 0), (9, -4), (14, -3)]);
        assert!(check_general_position(&a, &b).is_clean());
        let r = separating_common_tangent(&a, &b).unwrap();
        let t = r.tangent().unwrap();
        assert_eq!((t.pair(), t.stats.updates), ((0, 0), 0));
    }

    #[test]
    fn hulls_disjoint_ignores_orientation_and_order() {
        let (a, b) = squares();
        let (c, d) = nested();
        for (x, y, want) in [(&a, &b, true), (&c, &d, false)] {
            let (xr, yr) = (x.to_reversed(), y.to_reversed());
            assert_eq!(hulls_disjoint(x, y), want);
            assert_eq!(hulls_disjoint(&xr, y), want);
            assert_eq!(hulls_disjoint(x, &yr), want);
            assert_eq!(hulls_disjoint(y, x), want);
        }
    }

    #[test]
    fn second_variant_pivots_map_back() {
        let a = random_star_polygon(3, 9, crate::geom::Point::new(0, 0).unwrap(), 100, 200).unwrap();
        let b = random_star_polygon(4, 7, crate::geom::Point::new(1000, 0).unwrap(), 100, 200).unwrap();
        let mut last = None;
        let mut sink = |step: &TraceStep| last = Some(step.state);
        let r = second_separating_tangent_traced(&a, &b, &mut sink).unwrap();
        let t = r.tangent().unwrap();
        assert_eq!(Variant::SecondSeparating.pivots(&last.unwrap(), 9, 7), t.pair());

        let b_cw = b.to_reversed();
        let mut last = None;
        let mut sink = |step: &TraceStep| last = Some(step.state);
        let r = second_outer_tangent_traced(&a, &b_cw, &mut sink).unwrap();
        let t = r.tangent().unwrap();
        assert_eq!(Variant::SecondOuter.pivots(&last.unwrap(), 9, 7), t.pair());
    }
}
