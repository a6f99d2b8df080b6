//! The `polytangent v1` text format.
//!
//! ```text
//! polytangent v1
//! poly <name> <n> <ccw|cw>
//! <x> <y>          (n lines)
//! ...              (further poly blocks)
//! ```
//!
//! Lines end in a single LF, fields are separated by single spaces, and
//! coordinates are decimal integers within the grid bound. The declared
//! orientation is checked against the signed area.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geom::{GeomError, Point};
use crate::polygon::{
    check_general_position, simplicity_violations, Orientation, Polygon, PolygonError, PolygonView, ValidationReport,
};

pub const HEADER: &str = "polytangent v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedPolygon {
    pub name: String,
    pub polygon: Polygon,
}

impl NamedPolygon {
    pub fn new(name: impl Into<String>, polygon: Polygon) -> Self {
        NamedPolygon { name: name.into(), polygon }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: coordinate '{text}' exceeds the bound |c| <= 2^30")]
    CoordinateOverflow { line: usize, text: String },
    #[error("line {line}: {source}")]
    Coordinate { line: usize, source: GeomError },
    #[error("polygon '{name}' (line {line}): {source}")]
    Polygon { line: usize, name: String, source: PolygonError },
    #[error("polygon '{name}' is not simple after snapping; crossing edges: {}", format_edges(.edges))]
    NotSimple { name: String, edges: Vec<(usize, usize)> },
}

fn format_edges(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(i, j)| format!("{i}-{j}")).collect::<Vec<_>>().join(", ")
}

/// Input to a polygon block: a coordinate parser for one line.
trait CoordParser {
    fn parse(&self, line: usize, token: &str) -> Result<i64, IoError>;
}

struct IntCoords;

impl CoordParser for IntCoords {
    fn parse(&self, line: usize, token: &str) -> Result<i64, IoError> {
        let digits = token.strip_prefix('-').unwrap_or(token);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(IoError::Malformed { line, message: format!("expected an integer, found '{token}'") });
        }
        token.parse::<i64>().map_err(|_| IoError::CoordinateOverflow { line, text: token.to_string() })
    }
}

struct FloatCoords {
    scale: i64,
}

impl CoordParser for FloatCoords {
    fn parse(&self, line: usize, token: &str) -> Result<i64, IoError> {
        let value: f64 = token.parse().ok().filter(|v: &f64| v.is_finite()).ok_or_else(|| IoError::Malformed {
            line,
            message: format!("expected a decimal number, found '{token}'"),
        })?;
        let snapped = (value * self.scale as f64).round();
        if snapped.abs() > i64::MAX as f64 / 2.0 {
            return Err(IoError::CoordinateOverflow { line, text: token.to_string() });
        }
        Ok(snapped as i64)
    }
}

fn parse_with<C: CoordParser>(text: &str, coords: &C) -> Result<Vec<NamedPolygon>, IoError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((line, other)) => {
            return Err(IoError::Malformed { line, message: format!("expected header '{HEADER}', found '{other}'") })
        }
        None => return Err(IoError::Malformed { line: 1, message: "empty input".into() }),
    }

    let mut out = Vec::new();
    while let Some((line, header)) = lines.next() {
        let fields: Vec<&str> = header.split(' ').collect();
        let [kw, name, n, orient] = fields[..] else {
            return Err(IoError::Malformed {
                line,
                message: format!("expected 'poly <name> <n> <ccw|cw>', found '{header}'"),
            });
        };
        if kw != "poly" || name.is_empty() {
            return Err(IoError::Malformed {
                line,
                message: format!("expected 'poly <name> <n> <ccw|cw>', found '{header}'"),
            });
        }
        let n: usize =
            n.parse().map_err(|_| IoError::Malformed { line, message: format!("invalid corner count '{n}'") })?;
        if n < 3 {
            return Err(IoError::Polygon { line, name: name.to_string(), source: PolygonError::TooFewCorners(n) });
        }
        let declared = match orient {
            "ccw" => Orientation::CounterClockwise,
            "cw" => Orientation::Clockwise,
            other => {
                return Err(IoError::Malformed {
                    line,
                    message: format!("orientation must be 'ccw' or 'cw', found '{other}'"),
                })
            }
        };

        let mut corners = Vec::with_capacity(n.min(1 << 20));
        for _ in 0..n {
            let Some((cl, text)) = lines.next() else {
                return Err(IoError::Malformed {
                    line: line + corners.len() + 1,
                    message: format!("polygon '{name}' ends after {} of {n} corners", corners.len()),
                });
            };
            let [xs, ys] = text.split(' ').collect::<Vec<_>>()[..] else {
                return Err(IoError::Malformed { line: cl, message: format!("expected '<x> <y>', found '{text}'") });
            };
            let (x, y) = (coords.parse(cl, xs)?, coords.parse(cl, ys)?);
            corners.push(Point::new(x, y).map_err(|source| IoError::Coordinate { line: cl, source })?);
        }
        let polygon = Polygon::with_orientation(corners, declared).map_err(|source| IoError::Polygon {
            line,
            name: name.to_string(),
            source,
        })?;
        out.push(NamedPolygon::new(name, polygon));
    }
    Ok(out)
}

/// Parses a canonical file with integer coordinates.
pub fn parse(text: &str) -> Result<Vec<NamedPolygon>, IoError> {
    parse_with(text, &IntCoords)
}

/// Canonical serialization; `parse(&serialize(v)) == v`.
pub fn serialize(polygons: &[NamedPolygon]) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for p in polygons {
        let _ = writeln!(out, "poly {} {} {}", p.name, p.polygon.corners().len(), p.polygon.orientation().as_str());
        for c in p.polygon.corners() {
            let _ = writeln!(out, "{} {}", c.x(), c.y());
        }
    }
    out
}

/// Result of a lossy floating-point import.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloatImport {
    pub polygons: Vec<NamedPolygon>,
    /// General-position report for the first two polygons, when there are
    /// at least two. Snapping can create collinear triples.
    pub report: Option<ValidationReport>,
}

/// Reads the same layout with decimal coordinates, multiplies each by
/// `scale` and rounds to the nearest integer. Fails if a snapped polygon is
/// not simple.
pub fn import_float(text: &str, scale: i64) -> Result<FloatImport, IoError> {
    if scale <= 0 {
        return Err(IoError::Malformed { line: 0, message: format!("scale must be positive, got {scale}") });
    }
    let polygons = parse_with(text, &FloatCoords { scale })?;
    for p in &polygons {
        let edges = simplicity_violations(&p.polygon);
        if !edges.is_empty() {
            return Err(IoError::NotSimple { name: p.name.clone(), edges });
        }
    }
    let report = match &polygons[..] {
        [a, b, ..] => Some(check_general_position(&a.polygon, &b.polygon)),
        _ => None,
    };
    Ok(FloatImport { polygons, report })
}
