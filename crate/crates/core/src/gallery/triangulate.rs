use super::polygon::{in_closed_triangle, orient, SimplePolygon};
use crate::error::{Error, Result};
use crate::mop::Mop;

/// Ear-clipping triangulation; corner `i` becomes vertex `i`.
///
/// Among the available ears, the one whose cutting diagonal is
/// lexicographically smallest is clipped first, so the result is a
/// deterministic function of the corner list.
pub fn triangulate(p: &SimplePolygon) -> Result<Mop> {
    let n = p.len();
    let mut ring: Vec<usize> = (0..n).collect();
    let mut diagonals = Vec::with_capacity(n.saturating_sub(3));
    while ring.len() > 3 {
        let m = ring.len();
        let mut best: Option<((usize, usize), usize)> = None;
        for pos in 0..m {
            let (u, v, w) = (ring[(pos + m - 1) % m], ring[pos], ring[(pos + 1) % m]);
            let cut = (u.min(w), u.max(w));
            if best.is_some_and(|(b, _)| b <= cut) {
                continue;
            }
            if is_ear(p, &ring, u, v, w) {
                best = Some((cut, pos));
            }
        }
        let Some((cut, pos)) = best else {
            return Err(Error::Degenerate("no ear found".into()));
        };
        diagonals.push(cut);
        ring.remove(pos);
    }
    Mop::new(n, diagonals)
}

fn is_ear(p: &SimplePolygon, ring: &[usize], u: usize, v: usize, w: usize) -> bool {
    let (a, b, c) = (p.corner(u), p.corner(v), p.corner(w));
    if orient(a, b, c) <= 0 {
        return false;
    }
    ring.iter().filter(|&&x| x != u && x != v && x != w).all(|&x| !in_closed_triangle(a, b, c, p.corner(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_takes_lowest_diagonal() {
        let sq = SimplePolygon::new(vec![(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(triangulate(&sq).unwrap().diagonals(), &[(0, 2)]);
    }

    #[test]
    fn convex_hexagon() {
        let hex = SimplePolygon::new(vec![(2, 0), (4, 1), (4, 3), (2, 4), (0, 3), (0, 1)]).unwrap();
        let g = triangulate(&hex).unwrap();
        assert_eq!(g.diagonals().len(), 3);
        for &(a, b) in g.diagonals() {
            assert!(hex.is_internal_diagonal(a, b));
        }
    }

    #[test]
    fn dart_avoids_outside_chord() {
        let dart = SimplePolygon::new(vec![(0, 0), (4, 0), (2, 1), (2, 4)]).unwrap();
        assert_eq!(triangulate(&dart).unwrap().diagonals(), &[(0, 2)]);
    }
}
