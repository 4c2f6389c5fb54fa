//! Text formats.
//!
//! * MOP1: first line `n`, then one `a b` line per diagonal (written
//!   sorted, read in any order).
//! * POLY1: first line `n`, then `n` lines `x y`, counterclockwise.
//! * JSON mirrors `{"n": .., "diagonals": [[a, b], ..]}` and
//!   `{"n": .., "corners": [[x, y], ..]}`.
//! * Vertex sets: integers separated by whitespace or commas, optionally
//!   wrapped in braces or brackets.
//!
//! Blank lines and lines starting with `#` are ignored in the line formats.
//! Structural problems surface as the validation error of the type itself.

use std::fmt::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gallery::{Point, SimplePolygon};
use crate::mop::{Mop, VertexSet};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-empty, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn fields<T: FromStr, const N: usize>(line: usize, s: &str) -> Result<[T; N]> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != N {
        return Err(parse_err(line, format!("expected {N} fields, found {}", parts.len())));
    }
    let mut out = Vec::with_capacity(N);
    for p in parts {
        out.push(p.parse::<T>().map_err(|_| parse_err(line, format!("'{p}' is not a valid number")))?);
    }
    out.try_into().map_err(|_| unreachable!())
}

/// Header count and the remaining content lines.
fn counted_lines(text: &str) -> Result<(usize, Vec<(usize, &str)>)> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let [n] = fields::<usize, 1>(line, header)?;
    Ok((n, lines.collect()))
}

pub fn parse_mop1(text: &str) -> Result<Mop> {
    let (n, lines) = counted_lines(text)?;
    let diagonals = lines
        .into_iter()
        .map(|(line, s)| fields::<usize, 2>(line, s).map(|[a, b]| (a, b)))
        .collect::<Result<Vec<_>>>()?;
    Mop::new(n, diagonals)
}

pub fn write_mop1(g: &Mop) -> String {
    let mut out = format!("{}\n", g.n());
    for &(a, b) in g.diagonals() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

#[derive(Serialize, Deserialize)]
struct MopJson {
    n: usize,
    diagonals: Vec<[usize; 2]>,
}

pub fn parse_mop_json(text: &str) -> Result<Mop> {
    let raw: MopJson = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    Mop::new(raw.n, raw.diagonals.into_iter().map(|[a, b]| (a, b)))
}

pub fn write_mop_json(g: &Mop) -> String {
    let raw = MopJson { n: g.n(), diagonals: g.diagonals().iter().map(|&(a, b)| [a, b]).collect() };
    serde_json::to_string(&raw).expect("plain data serializes")
}

/// MOP1 or JSON, by the first non-blank character.
pub fn parse_mop(text: &str) -> Result<Mop> {
    if text.trim_start().starts_with('{') {
        parse_mop_json(text)
    } else {
        parse_mop1(text)
    }
}

pub fn parse_poly1(text: &str) -> Result<SimplePolygon> {
    let (n, lines) = counted_lines(text)?;
    if lines.len() != n {
        let line = lines.last().map_or(1, |l| l.0);
        return Err(parse_err(line, format!("header announces {n} corners, found {}", lines.len())));
    }
    let corners = lines
        .into_iter()
        .map(|(line, s)| fields::<i64, 2>(line, s).map(|[x, y]| (x, y)))
        .collect::<Result<Vec<Point>>>()?;
    SimplePolygon::new(corners)
}

pub fn write_poly1(p: &SimplePolygon) -> String {
    let mut out = format!("{}\n", p.len());
    for &(x, y) in p.corners() {
        let _ = writeln!(out, "{x} {y}");
    }
    out
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    corners: Vec<[i64; 2]>,
}

pub fn parse_poly_json(text: &str) -> Result<SimplePolygon> {
    let raw: PolyJson = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    if raw.corners.len() != raw.n {
        return Err(parse_err(1, format!("n is {} but {} corners are listed", raw.n, raw.corners.len())));
    }
    SimplePolygon::new(raw.corners.into_iter().map(|[x, y]| (x, y)).collect())
}

pub fn write_poly_json(p: &SimplePolygon) -> String {
    let raw = PolyJson { n: p.len(), corners: p.corners().iter().map(|&(x, y)| [x, y]).collect() };
    serde_json::to_string(&raw).expect("plain data serializes")
}

pub fn parse_polygon(text: &str) -> Result<SimplePolygon> {
    if text.trim_start().starts_with('{') {
        parse_poly_json(text)
    } else {
        parse_poly1(text)
    }
}

pub fn parse_vertex_set(text: &str) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for (line, s) in content_lines(text) {
        let s = s.trim_matches(|c| matches!(c, '{' | '}' | '[' | ']'));
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let v = tok.parse().map_err(|_| parse_err(line, format!("'{tok}' is not a vertex index")))?;
            set.insert(v);
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::fan;

    #[test]
    fn mop1_round_trip_and_order() {
        let f = fan(6).unwrap();
        assert_eq!(write_mop1(&f), "6\n0 2\n0 3\n0 4\n");
        assert_eq!(parse_mop1("# fan\n6\n0 4\n3 0\n\n0 2\n").unwrap(), f);
        assert_eq!(parse_mop(&write_mop_json(&f)).unwrap(), f);
        assert_eq!(write_mop_json(&f), r#"{"n":6,"diagonals":[[0,2],[0,3],[0,4]]}"#);
    }

    #[test]
    fn mop1_errors() {
        assert!(matches!(parse_mop1(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_mop1("5\n0 2\n0 x\n"), Err(Error::Parse { line: 3, .. })));
        assert_eq!(parse_mop1("5\n0 2\n1 3\n"), Err(Error::CrossingDiagonals((0, 2), (1, 3))));
        assert_eq!(parse_mop1("5\n0 2\n"), Err(Error::WrongDiagonalCount { expected: 2, found: 1 }));
    }

    #[test]
    fn poly_round_trip() {
        let p = SimplePolygon::new(vec![(0, 0), (3, 0), (3, 2), (0, 2)]).unwrap();
        assert_eq!(parse_polygon(&write_poly1(&p)).unwrap(), p);
        assert_eq!(parse_polygon(&write_poly_json(&p)).unwrap(), p);
        assert!(matches!(parse_poly1("4\n0 0\n1 0\n1 1\n"), Err(Error::Parse { .. })));
        assert_eq!(parse_poly1("3\n0 0\n0 1\n1 0\n"), Err(Error::NotCounterClockwise));
    }

    #[test]
    fn vertex_sets() {
        assert_eq!(parse_vertex_set("0 2, 5\n7").unwrap(), VertexSet::from(vec![0, 2, 5, 7]));
        assert_eq!(parse_vertex_set("{1,3}").unwrap(), VertexSet::from(vec![1, 3]));
        assert!(parse_vertex_set("").unwrap().is_empty());
        assert!(matches!(parse_vertex_set("1 -2"), Err(Error::Parse { line: 1, .. })));
    }
}
