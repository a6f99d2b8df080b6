//! SVG 1.1 rendering of a traced run.
//!
//! Grid coordinates map to the document by `X = x - min_x + margin` and
//! `Y = max_y - y + margin`, so the y axis points up as in the input and
//! counterclockwise polygons appear counterclockwise on screen. Every
//! temporary line is a dashed `<line class="temporary">` spanning the
//! drawing; the final tangent is a solid `<line class="tangent">`.

use std::fmt::Write as _;

use crate::geom::Point;
use crate::polygon::{Polygon, PolygonView};
use crate::tangents::Variant;

use super::Outcome;

struct Frame {
    min_x: i64,
    max_y: i64,
    margin: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn new(polys: [&Polygon; 2]) -> Frame {
        let pts = polys.iter().flat_map(|p| p.corners().iter());
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for p in pts {
            min_x = min_x.min(p.x());
            max_x = max_x.max(p.x());
            min_y = min_y.min(p.y());
            max_y = max_y.max(p.y());
        }
        let (w, h) = ((max_x - min_x) as f64, (max_y - min_y) as f64);
        let margin = (w.max(h) * 0.08).max(1.0);
        Frame { min_x, max_y, margin, width: w + 2.0 * margin, height: h + 2.0 * margin }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (x - self.min_x as f64 + self.margin, self.max_y as f64 - y + self.margin)
    }

    fn stroke(&self) -> f64 {
        self.width.max(self.height) / 400.0
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// The line through `a` and `b`, extended past both ends by the drawing's
/// diagonal so it crosses the whole viewport.
fn line_element(frame: &Frame, a: Point, b: Point, class: &str) -> String {
    let (dx, dy) = ((b.x() - a.x()) as f64, (b.y() - a.y()) as f64);
    let len = dx.hypot(dy);
    let ext = (frame.width.hypot(frame.height)) / len;
    let (x1, y1) = frame.map(a.x() as f64 - dx * ext, a.y() as f64 - dy * ext);
    let (x2, y2) = frame.map(b.x() as f64 + dx * ext, b.y() as f64 + dy * ext);
    format!("<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", num(x1), num(y1), num(x2), num(y2))
}

fn polygon_path(frame: &Frame, poly: &Polygon, class: &str) -> String {
    let mut d = String::new();
    for (i, c) in poly.corners().iter().enumerate() {
        let (x, y) = frame.map(c.x() as f64, c.y() as f64);
        let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, num(x), num(y));
    }
    d.push('Z');
    format!("<path class=\"{class}\" d=\"{d}\"/>\n")
}

pub(crate) fn render(
    p0: &Polygon,
    p1: &Polygon,
    variant: Variant,
    trace: &[(Point, Point)],
    outcome: &Outcome,
) -> String {
    let frame = Frame::new([p0, p1]);
    let sw = frame.stroke();
    let mut doc = String::new();
    doc.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        doc,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        num((800.0 * frame.height / frame.width).round()),
        num(frame.width),
        num(frame.height)
    );
    let _ = writeln!(
        doc,
        "<style>\n\
         path {{ stroke: #333; stroke-width: {w}; fill-opacity: 0.25; }}\n\
         path.p0 {{ fill: #4477aa; }}\n\
         path.p1 {{ fill: #ee6677; }}\n\
         line.temporary {{ stroke: #888; stroke-width: {w}; stroke-dasharray: {d} {d}; }}\n\
         line.tangent {{ stroke: #228833; stroke-width: {t}; }}\n\
         text {{ font-family: sans-serif; font-size: {f}px; }}\n\
         </style>",
        w = num(sw),
        d = num(sw * 6.0),
        t = num(sw * 2.0),
        f = num(frame.height.min(frame.width) / 20.0),
    );
    doc.push_str(&polygon_path(&frame, p0, "p0"));
    doc.push_str(&polygon_path(&frame, p1, "p1"));
    for &(a, b) in trace {
        doc.push_str(&line_element(&frame, a, b, "temporary"));
    }
    let label = match *outcome {
        Outcome::Tangent { s0, s1, stats, .. } => {
            doc.push_str(&line_element(&frame, p0.corner(s0), p1.corner(s1), "tangent"));
            format!(
                "{}: P0[{s0}] P1[{s1}], {} iterations, {} updates",
                variant.as_str(),
                stats.iterations,
                stats.updates
            )
        }
        Outcome::NotSeparable { stats } => {
            format!("{}: NULL (hulls not disjoint), {} iterations", variant.as_str(), stats.iterations)
        }
        Outcome::Uncertain { stats, .. } => {
            format!(
                "{}: precondition uncertain (hulls not disjoint), {} iterations",
                variant.as_str(),
                stats.iterations
            )
        }
    };
    let _ = writeln!(doc, "<text x=\"{}\" y=\"{}\">{label}</text>", num(frame.margin / 4.0), num(frame.margin * 0.75));
    doc.push_str("</svg>\n");
    doc
}
