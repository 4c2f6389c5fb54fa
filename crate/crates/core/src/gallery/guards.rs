use super::polygon::SimplePolygon;
use super::triangulate::triangulate;
use crate::error::{Error, Result};
use crate::isolation::isolate_order;
use crate::mop::{Mop, VertexSet};

/// Corner guards together with the evidence that every window of `k + 2`
/// consecutive corners contains a corner adjacent (or equal) to a guard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardCertificate {
    pub guards: VertexSet,
    pub k: usize,
    /// `windows[w]` is a covered corner among `w, w+1, ..., w+k+1`.
    pub windows: Vec<usize>,
    /// Guards returned by the isolating-set algorithm, before any repair.
    pub initial_size: usize,
    /// Guards added because a window was left uncovered.
    pub augmentations: usize,
    pub triangulation: Mop,
}

fn window_len(n: usize, k: usize) -> usize {
    (k + 2).min(n)
}

/// For each cyclic window of `k + 2` corners, the first corner in it that
/// lies in `N[S]`. Fails with the first uncovered window.
fn covering_corners(g: &Mop, s: &VertexSet, k: usize) -> std::result::Result<Vec<usize>, usize> {
    let n = g.n();
    let valid: VertexSet = s.iter().filter(|&v| v < n).collect();
    let covered = g.dominated_mask(&valid);
    let len = window_len(n, k);
    (0..n).map(|w| (0..len).map(|d| (w + d) % n).find(|&v| covered[v]).ok_or(w)).collect()
}

/// Whether every window of `k + 2` consecutive vertices meets `N[S]`, and
/// the start of the first window that does not.
pub fn verify_window_coverage(g: &Mop, s: &VertexSet, k: usize) -> (bool, Option<usize>) {
    match covering_corners(g, s, k) {
        Ok(_) => (true, None),
        Err(w) => (false, Some(w)),
    }
}

/// Triangulates `p`, takes an isolating set of the triangulation as corner
/// guards, and certifies the window property, repairing it with the middle
/// corner of any uncovered window.
pub fn place_guards(p: &SimplePolygon, k: usize) -> Result<GuardCertificate> {
    let n = p.len();
    if n < k + 4 {
        return Err(Error::TooSmall { n, min: k + 4 });
    }
    let g = triangulate(p)?;
    let mut guards = isolate_order(&g, k)?.set;
    let initial_size = guards.len();
    let mut augmentations = 0;
    let windows = loop {
        match covering_corners(&g, &guards, k) {
            Ok(windows) => break windows,
            Err(w) => {
                guards.insert((w + window_len(n, k) / 2) % n);
                augmentations += 1;
            }
        }
    };
    Ok(GuardCertificate { guards, k, windows, initial_size, augmentations, triangulation: g })
}
