//! Simple polygons, triangulation into mops, and relaxed corner guards.

mod guards;
mod polygon;
mod spiral;
mod svg;
mod triangulate;

pub use guards::{place_guards, verify_window_coverage, GuardCertificate};
pub use polygon::{in_closed_triangle, on_segment, orient, segments_intersect, Point, SimplePolygon};
pub use spiral::{spiral_corner, spiral_gallery};
pub use svg::{render_mop_svg, render_polygon_svg};
pub use triangulate::triangulate;
