use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Point = (i64, i64);

/// Sign of the turn `a -> b -> c`: positive for a left turn.
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    let (bx, by) = (b.0 as i128, b.1 as i128);
    let (cx, cy) = (c.0 as i128, c.1 as i128);
    ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)).signum()
}

/// `p` lies on the closed segment `ab` (assuming collinearity was checked).
fn within_box(a: Point, b: Point, p: Point) -> bool {
    a.0.min(b.0) <= p.0 && p.0 <= a.0.max(b.0) && a.1.min(b.1) <= p.1 && p.1 <= a.1.max(b.1)
}

pub fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0 && within_box(a, b, p)
}

/// Closed segments `ab` and `cd` share a point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within_box(a, b, c))
        || (o2 == 0 && within_box(a, b, d))
        || (o3 == 0 && within_box(c, d, a))
        || (o4 == 0 && within_box(c, d, b))
}

/// `p` lies in the closed triangle `abc` (any orientation).
pub fn in_closed_triangle(a: Point, b: Point, c: Point, p: Point) -> bool {
    let (d1, d2, d3) = (orient(a, b, p), orient(b, c, p), orient(c, a, p));
    let has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    let has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    !(has_neg && has_pos)
}

/// Simple polygon with integer corners listed counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct SimplePolygon {
    corners: Vec<Point>,
}

impl TryFrom<Vec<Point>> for SimplePolygon {
    type Error = Error;

    fn try_from(corners: Vec<Point>) -> Result<Self> {
        Self::new(corners)
    }
}

impl From<SimplePolygon> for Vec<Point> {
    fn from(p: SimplePolygon) -> Self {
        p.corners
    }
}

impl SimplePolygon {
    pub fn new(corners: Vec<Point>) -> Result<Self> {
        let n = corners.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        for i in 0..n {
            let (a, b, c) = (corners[i], corners[(i + 1) % n], corners[(i + 2) % n]);
            if orient(a, b, c) == 0 {
                return Err(Error::Degenerate(format!(
                    "corners {}, {}, {} are collinear",
                    i,
                    (i + 1) % n,
                    (i + 2) % n
                )));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                let (a, b) = (corners[i], corners[(i + 1) % n]);
                let (c, d) = (corners[j], corners[(j + 1) % n]);
                if segments_intersect(a, b, c, d) {
                    return Err(Error::NotSimple(i, j));
                }
            }
        }
        let poly = Self { corners };
        match poly.doubled_area() {
            a if a > 0 => Ok(poly),
            0 => Err(Error::Degenerate("zero area".into())),
            _ => Err(Error::NotCounterClockwise),
        }
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn corner(&self, i: usize) -> Point {
        self.corners[i % self.corners.len()]
    }

    /// Twice the signed area (shoelace).
    pub fn doubled_area(&self) -> i128 {
        let n = self.corners.len();
        (0..n)
            .map(|i| {
                let (a, b) = (self.corners[i], self.corners[(i + 1) % n]);
                a.0 as i128 * b.1 as i128 - b.0 as i128 * a.1 as i128
            })
            .sum()
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        let n = self.len();
        orient(self.corner(i + n - 1), self.corner(i), self.corner(i + 1)) < 0
    }

    /// Maximal cyclic runs of consecutive reflex corners.
    pub fn reflex_chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let reflex: Vec<bool> = (0..n).map(|i| self.is_reflex(i)).collect();
        let Some(start) = (0..n).find(|&i| !reflex[i]) else {
            return vec![(0..n).collect()];
        };
        let mut chains = Vec::new();
        let mut cur = Vec::new();
        for step in 1..=n {
            let i = (start + step) % n;
            if reflex[i] {
                cur.push(i);
            } else if !cur.is_empty() {
                chains.push(std::mem::take(&mut cur));
            }
        }
        chains
    }

    /// Segment between corners `i` and `j` lies in the polygon and touches
    /// the boundary only at its endpoints.
    pub fn is_internal_diagonal(&self, i: usize, j: usize) -> bool {
        let n = self.len();
        if i == j || (i + 1) % n == j || (j + 1) % n == i {
            return false;
        }
        let (a, b) = (self.corner(i), self.corner(j));
        // Locally inside the cone at `i`.
        let (prev, next) = (self.corner(i + n - 1), self.corner(i + 1));
        let in_cone = if orient(prev, a, next) >= 0 {
            orient(a, b, prev) > 0 && orient(b, a, next) > 0
        } else {
            !(orient(a, b, next) >= 0 && orient(b, a, prev) >= 0)
        };
        if !in_cone {
            return false;
        }
        for e in 0..n {
            let f = (e + 1) % n;
            if e == i || e == j || f == i || f == j {
                // Edges incident to an endpoint can only touch at that
                // endpoint, except when collinear and overlapping.
                let (c, d) = (self.corner(e), self.corner(f));
                let other = if e == i || e == j { d } else { c };
                if other != a && other != b && on_segment(a, b, other) {
                    return false;
                }
                continue;
            }
            if segments_intersect(a, b, self.corner(e), self.corner(f)) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplePolygon {
        SimplePolygon::new(vec![(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(square().doubled_area(), 2);
        assert_eq!(SimplePolygon::new(vec![(0, 0), (1, 0)]), Err(Error::TooFewVertices(2)));
        assert_eq!(SimplePolygon::new(vec![(0, 0), (0, 1), (1, 1), (1, 0)]), Err(Error::NotCounterClockwise));
        assert!(matches!(SimplePolygon::new(vec![(0, 0), (1, 0), (2, 0), (1, 1)]), Err(Error::Degenerate(_))));
        // Bow tie.
        assert!(matches!(SimplePolygon::new(vec![(0, 0), (2, 2), (2, 0), (0, 2)]), Err(Error::NotSimple(..))));
    }

    #[test]
    fn diagonals() {
        let s = square();
        assert!(s.is_internal_diagonal(0, 2));
        assert!(s.is_internal_diagonal(1, 3));
        assert!(!s.is_internal_diagonal(0, 1));
        // A dart: corner 2 is reflex, so 1-3 runs outside.
        let dart = SimplePolygon::new(vec![(0, 0), (4, 0), (2, 1), (2, 4)]).unwrap();
        assert!(dart.is_reflex(2));
        assert!(!dart.is_internal_diagonal(1, 3));
        assert!(dart.is_internal_diagonal(0, 2));
        assert_eq!(dart.reflex_chains(), vec![vec![2]]);
    }
}
