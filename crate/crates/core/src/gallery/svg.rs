use std::fmt::Write;

use super::polygon::SimplePolygon;
use crate::mop::{Mop, VertexSet};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

fn document(points: &[(f64, f64)], diagonals: &[(usize, usize)], highlight: &VertexSet) -> String {
    let n = points.len();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#,
        w = SIZE + 2.0 * MARGIN
    );
    let _ = writeln!(out, r#"  <g id="boundary" stroke="black" stroke-width="1.5">"#);
    for i in 0..n {
        let (a, b) = (points[i], points[(i + 1) % n]);
        let _ = writeln!(out, r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1);
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g id="diagonals" stroke="gray" stroke-width="1" stroke-dasharray="5,4">"#);
    for &(u, v) in diagonals {
        let (a, b) = (points[u], points[v]);
        let _ = writeln!(out, r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1);
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g id="vertices">"#);
    for (v, p) in points.iter().enumerate() {
        let (r, fill) = if highlight.contains(v) { (6.0, "red") } else { (3.0, "black") };
        let class = if highlight.contains(v) { r#" class="highlight""# } else { "" };
        let _ = writeln!(out, r#"    <circle cx="{:.2}" cy="{:.2}" r="{r}" fill="{fill}"{class}/>"#, p.0, p.1);
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}

/// Draws `g` on a regular `n`-gon: boundary solid, diagonals dashed,
/// vertices of `highlight` in red.
pub fn render_mop_svg(g: &Mop, highlight: &VertexSet) -> String {
    let n = g.n();
    let c = MARGIN + SIZE / 2.0;
    let points: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / n as f64 - std::f64::consts::FRAC_PI_2;
            (c + SIZE / 2.0 * a.cos(), c + SIZE / 2.0 * a.sin())
        })
        .collect();
    document(&points, g.diagonals(), highlight)
}

/// Draws a polygon (y axis pointing up), optionally with the diagonals of
/// a triangulation whose vertices are its corners.
pub fn render_polygon_svg(p: &SimplePolygon, triangulation: Option<&Mop>, highlight: &VertexSet) -> String {
    let xs = p.corners().iter().map(|c| c.0 as f64);
    let ys = p.corners().iter().map(|c| c.1 as f64);
    let (min_x, max_x) = xs.fold((f64::MAX, f64::MIN), |(lo, hi), x| (lo.min(x), hi.max(x)));
    let (min_y, max_y) = ys.fold((f64::MAX, f64::MIN), |(lo, hi), y| (lo.min(y), hi.max(y)));
    let scale = SIZE / (max_x - min_x).max(max_y - min_y).max(1.0);
    let points: Vec<(f64, f64)> = p
        .corners()
        .iter()
        .map(|&(x, y)| (MARGIN + (x as f64 - min_x) * scale, MARGIN + (max_y - y as f64) * scale))
        .collect();
    document(&points, triangulation.map_or(&[][..], |g| g.diagonals()), highlight)
}
