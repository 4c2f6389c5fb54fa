//! The spiral galleries `P_{t,k}`: `t` truncated spiral rooms of `k + 4`
//! corners opening onto a thin corridor.
//!
//! Each room is built in a local frame (clockwise, as `c_1 .. c_{k+4}`):
//!
//! * `c_1 .. c_k` sit on a quarter circle of radius `R` around the origin,
//!   from angle 0 to 90 degrees, so `c_2 .. c_{k-1}` (and `c_k`, through
//!   the next corner) are reflex;
//! * `c_{k+1}` is a horn on the tangent at `c_k`, which hides the chain
//!   from everything but `c_{k+2}`;
//! * `c_{k+2}` lies far out on the 45 degree ray and sees the whole chain;
//! * `c_{k+3}, c_{k+4}` lie just right of `c_1`, under the tangent at
//!   `c_2`, so they see at most `c_1, c_2`.
//!
//! The visibility graph of a room is then the fan from `c_{k+2}` plus a
//! few chords that never cross it, so every triangulation contains that
//! fan and every room needs a guard of its own. Rooms sit on `y = 0`,
//! one room width apart; the two outermost corners drop to `y = -1`.
//! For `k = 0` the room is a plain square.

use super::polygon::{Point, SimplePolygon};
use super::triangulate::triangulate;
use crate::error::{Error, Result};

fn room(k: usize) -> Vec<Point> {
    if k == 0 {
        return vec![(0, 0), (0, 4), (4, 4), (4, 0)];
    }
    let r = (100 * (k + 1) * (k + 1)) as f64;
    let step = std::f64::consts::FRAC_PI_2 / (k.max(2) - 1) as f64;
    let round = |x: f64| x.round() as i64;
    let mut pts: Vec<Point> = (0..k)
        .map(|j| {
            let phi = step * j as f64;
            (round(r * phi.cos()), round(r * phi.sin()))
        })
        .collect();
    let ri = round(r);
    let off = round(r * (1.0 - step.cos()) / 2.0);
    pts.push((-ri, ri));
    let far = round(4.0 * r / std::f64::consts::SQRT_2);
    pts.push((far, far));
    pts.push((ri + off, off));
    // Left of the line through c_{k+2}, c_{k+3}, keeping c_{k+3} convex.
    pts.push((ri + off / 4, 0));
    pts
}

/// `P_{t,k}` with `t(k+4)` corners listed counterclockwise from `c^1_1`.
pub fn spiral_gallery(t: usize, k: usize) -> Result<SimplePolygon> {
    if t < 1 {
        return Err(Error::BadParams(format!("spiral gallery needs t >= 1, got t = {t}")));
    }
    let unit = room(k);
    let min_x = unit.iter().map(|p| p.0).min().unwrap_or(0);
    let max_x = unit.iter().map(|p| p.0).max().unwrap_or(0);
    let width = 2 * (max_x - min_x);
    let mut clockwise: Vec<Point> = Vec::with_capacity(t * (k + 4));
    for i in 0..t {
        let shift = i as i64 * width - unit[0].0;
        clockwise.extend(unit.iter().map(|&(x, y)| (x + shift, y)));
    }
    clockwise[0].1 = -1;
    let last = clockwise.len() - 1;
    clockwise[last].1 = -1;
    // Reverse to counterclockwise, keeping c^1_1 at index 0.
    clockwise[1..].reverse();
    let poly = SimplePolygon::new(clockwise)?;
    check_rooms_private(&poly, t, k)?;
    Ok(poly)
}

/// Corner index of `c^i_j` (1-based `i` and `j`) in [`spiral_gallery`].
pub fn spiral_corner(t: usize, k: usize, i: usize, j: usize) -> usize {
    let pos = (i - 1) * (k + 4) + (j - 1);
    if pos == 0 {
        0
    } else {
        t * (k + 4) - pos
    }
}

/// No corner `c^i_2 .. c^i_{k+3}` is joined to a corner of another room
/// in the triangulation.
fn check_rooms_private(poly: &SimplePolygon, t: usize, k: usize) -> Result<()> {
    let g = triangulate(poly)?;
    let mut room_of = vec![(0, 0); poly.len()];
    for i in 1..=t {
        for j in 1..=k + 4 {
            room_of[spiral_corner(t, k, i, j)] = (i, j);
        }
    }
    for (u, v) in g.edges() {
        let ((ru, ju), (rv, jv)) = (room_of[u], room_of[v]);
        let private = |j: usize| (2..=k + 3).contains(&j);
        if ru != rv && (private(ju) || private(jv)) {
            return Err(Error::Verification(format!("room corners {u} and {v} of different rooms are joined")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_counts() {
        for t in 1..=4 {
            for k in 0..=6 {
                assert_eq!(spiral_gallery(t, k).unwrap().len(), t * (k + 4));
            }
        }
        assert!(matches!(spiral_gallery(0, 2), Err(Error::BadParams(_))));
    }

    #[test]
    fn corner_labels() {
        assert_eq!(spiral_corner(2, 0, 1, 1), 0);
        assert_eq!(spiral_corner(2, 0, 1, 2), 7);
        assert_eq!(spiral_corner(2, 0, 2, 4), 1);
    }

    #[test]
    fn one_reflex_chain_per_room() {
        let p = spiral_gallery(4, 3).unwrap();
        let labels: Vec<Vec<(usize, usize)>> = p
            .reflex_chains()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&v| {
                        (1..=4)
                            .flat_map(|i| (1..=7).map(move |j| (i, j)))
                            .find(|&(i, j)| spiral_corner(4, 3, i, j) == v)
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        assert_eq!(labels.len(), 4, "{labels:?}");
    }
}
