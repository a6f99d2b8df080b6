use std::ptr;

use polytangent_ffi::*;

fn polygon(coords: &[(i64, i64)]) -> *mut PtPolygon {
    let xy: Vec<i64> = coords.iter().flat_map(|&(x, y)| [x, y]).collect();
    let mut out = ptr::null_mut();
    let status = unsafe { pt_polygon_new(xy.as_ptr(), coords.len(), &mut out) };
    assert_eq!(status, PtStatus::Ok);
    assert!(!out.is_null());
    out
}

fn empty_tangent() -> PtTangent {
    PtTangent {
        s0: usize::MAX,
        s1: usize::MAX,
        stats: PtRunStats::default(),
        precheck: PtRunStats::default(),
        uncertainty: PtUncertainty::None,
    }
}

const LEFT: [(i64, i64); 4] = [(0, 0), (2, 1), (3, 4), (-1, 3)];
const RIGHT: [(i64, i64); 4] = [(10, 0), (13, 1), (12, 5), (9, 3)];

#[test]
fn polygon_accessors() {
    let p = polygon(&LEFT);
    unsafe {
        assert_eq!(pt_polygon_len(p), 4);
        let mut o = PtOrientation::Clockwise;
        assert_eq!(pt_polygon_orientation(p, &mut o), PtStatus::Ok);
        assert_eq!(o, PtOrientation::CounterClockwise);
        let (mut x, mut y) = (0, 0);
        assert_eq!(pt_polygon_corner(p, 6, &mut x, &mut y), PtStatus::Ok);
        assert_eq!((x, y), (3, 4));

        let mut r = ptr::null_mut();
        assert_eq!(pt_polygon_reversed(p, &mut r), PtStatus::Ok);
        assert_eq!(pt_polygon_orientation(r, &mut o), PtStatus::Ok);
        assert_eq!(o, PtOrientation::Clockwise);
        assert_eq!(pt_polygon_corner(r, 1, &mut x, &mut y), PtStatus::Ok);
        assert_eq!((x, y), (-1, 3));
        pt_polygon_free(r);
        pt_polygon_free(p);
        pt_polygon_free(ptr::null_mut());
        assert_eq!(pt_polygon_len(ptr::null()), 0);
    }
}

#[test]
fn construction_errors() {
    let mut out = ptr::null_mut();
    let cases: [(&[i64], PtStatus); 4] = [
        (&[0, 0, 1, 0], PtStatus::TooFewCorners),
        (&[0, 0, 0, 0, 1, 1], PtStatus::DuplicateCorner),
        (&[0, 0, 1, 1, 2, 2], PtStatus::ZeroArea),
        (&[0, 0, 1 << 31, 0, 0, 1], PtStatus::CoordinateOutOfRange),
    ];
    for (xy, expected) in cases {
        let status = unsafe { pt_polygon_new(xy.as_ptr(), xy.len() / 2, &mut out) };
        assert_eq!(status, expected, "{xy:?}");
        assert!(out.is_null());
    }
    assert_eq!(unsafe { pt_polygon_new(ptr::null(), 3, &mut out) }, PtStatus::NullPointer);
}

#[test]
fn null_arguments_are_reported() {
    let p = polygon(&LEFT);
    let mut t = empty_tangent();
    unsafe {
        assert_eq!(pt_separating_tangent(p, ptr::null(), &mut t), PtStatus::NullPointer);
        assert_eq!(pt_outer_tangent(ptr::null(), p, &mut t), PtStatus::NullPointer);
        assert_eq!(pt_second_outer_tangent(p, p, ptr::null_mut()), PtStatus::NullPointer);
        assert_eq!(pt_hulls_disjoint(p, p, ptr::null_mut()), PtStatus::NullPointer);
        assert_eq!(pt_orient(0, 0, 1, 0, 0, 1, ptr::null_mut()), PtStatus::NullPointer);
        pt_polygon_free(p);
    }
}

#[test]
fn all_four_tangents_of_separated_quadrilaterals() {
    let (a, b) = (polygon(&LEFT), polygon(&RIGHT));
    let mut t = empty_tangent();
    unsafe {
        assert_eq!(pt_separating_tangent(a, b, &mut t), PtStatus::Ok);
        let first = (t.s0, t.s1);
        assert!(t.stats.iterations > 0);
        assert_eq!(t.precheck, PtRunStats::default());
        assert_eq!(pt_second_separating_tangent(a, b, &mut t), PtStatus::Ok);
        assert_ne!((t.s0, t.s1), first);

        assert_eq!(pt_outer_tangent(a, b, &mut t), PtStatus::Ok);
        assert!(t.precheck.iterations > 0);
        assert_eq!(t.uncertainty, PtUncertainty::None);
        let outer = (t.s0, t.s1);
        assert_eq!(pt_second_outer_tangent(a, b, &mut t), PtStatus::Ok);
        assert_ne!((t.s0, t.s1), outer);

        let mut disjoint = false;
        assert_eq!(pt_hulls_disjoint(a, b, &mut disjoint), PtStatus::Ok);
        assert!(disjoint);
        pt_polygon_free(a);
        pt_polygon_free(b);
    }
}

#[test]
fn indices_follow_the_handle_order() {
    let (a, b) = (polygon(&LEFT), polygon(&RIGHT));
    let mut rb = ptr::null_mut();
    let (mut t, mut u) = (empty_tangent(), empty_tangent());
    unsafe {
        assert_eq!(pt_polygon_reversed(b, &mut rb), PtStatus::Ok);
        for f in [pt_separating_tangent, pt_second_separating_tangent, pt_outer_tangent, pt_second_outer_tangent] {
            assert_eq!(f(a, b, &mut t), PtStatus::Ok);
            assert_eq!(f(a, rb, &mut u), PtStatus::Ok);
            assert_eq!(t.s0, u.s0);
            assert_eq!(u.s1, (4 - t.s1) % 4);
        }
        pt_polygon_free(a);
        pt_polygon_free(b);
        pt_polygon_free(rb);
    }
}

#[test]
fn nested_triangles() {
    let outer = polygon(&[(0, 0), (100, 0), (0, 100)]);
    let inner = polygon(&[(10, 10), (30, 10), (10, 30)]);
    let mut t = empty_tangent();
    unsafe {
        assert_eq!(pt_separating_tangent(outer, inner, &mut t), PtStatus::NotSeparable);
        assert_eq!(pt_outer_tangent(outer, inner, &mut t), PtStatus::PreconditionUncertain);
        assert_eq!(t.uncertainty, PtUncertainty::HullsIntersect);
        let mut disjoint = true;
        assert_eq!(pt_hulls_disjoint(outer, inner, &mut disjoint), PtStatus::Ok);
        assert!(!disjoint);
        pt_polygon_free(outer);
        pt_polygon_free(inner);
    }
}

#[test]
fn orient_signs() {
    let mut s = 7;
    unsafe {
        assert_eq!(pt_orient(0, 0, 1, 0, 0, 1, &mut s), PtStatus::Ok);
        assert_eq!(s, 1);
        assert_eq!(pt_orient(0, 0, 1, 0, 0, -1, &mut s), PtStatus::Ok);
        assert_eq!(s, -1);
        assert_eq!(pt_orient(0, 0, 1, 1, 2, 2, &mut s), PtStatus::Ok);
        assert_eq!(s, 0);
        assert_eq!(pt_orient(0, 0, 1, 1, i64::MAX, 2, &mut s), PtStatus::CoordinateOutOfRange);
    }
}
