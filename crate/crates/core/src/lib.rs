//! Common tangents of two simple polygons in linear time and constant
//! workspace, with exact integer predicates and a brute-force oracle.

pub mod generator;
pub mod geom;
pub mod io;
pub mod oracle;
pub mod polygon;
pub mod tangents;

pub mod cli;

pub use geom::{orient, Point, Sign};
pub use polygon::{Orientation, Polygon, PolygonView};
pub use tangents::{
    hulls_disjoint, outer_common_tangent, second_outer_tangent, second_separating_tangent, separating_common_tangent,
    OuterTangent, RunStats, Separation, TangentResult,
};
