//! Constructive isolating-set and dominating-set algorithms with certified
//! size bounds.
//!
//! Every public entry point re-verifies its output before returning it; a
//! failed check surfaces as [`Error::Verification`] and indicates a bug.

use std::fmt;

use num_rational::Ratio;

use crate::coloring::three_coloring;
use crate::error::{Error, Result};
use crate::mop::{Mop, SplittingChord, VertexMap, VertexSet};

/// Which bound a solution is certified against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `n / (k + 4)`
    Order,
    /// `(n + n_2) / (k + 5)`
    OrderPlusN2,
    /// `(n - n_2) / (k + 2)`
    OrderMinusN2,
    /// Minimum of the applicable bounds above.
    Best,
    /// Domination, `n / 3`.
    DomThird,
    /// Domination, `(n - n_2) / 2`.
    DomHalf,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Order => "ORDER",
            BoundKind::OrderPlusN2 => "ORDER_PLUS_N2",
            BoundKind::OrderMinusN2 => "ORDER_MINUS_N2",
            BoundKind::Best => "BEST",
            BoundKind::DomThird => "DOM_THIRD",
            BoundKind::DomHalf => "DOM_HALF",
        }
    }

    pub fn is_domination(self) -> bool {
        matches!(self, BoundKind::DomThird | BoundKind::DomHalf)
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Proof step tags recorded in a trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// Exhaustive single-vertex scan on a small instance.
    Small,
    /// Splitting chord found.
    Split,
    /// Cut replaced by a shorter one through the apex.
    Refine,
    /// `l = k + 4`, cut edge contracted in the far side.
    Contract,
    /// `l = k + 4`, degree sum 5: delete `x_1..x_{k+5}`.
    DeleteBlock,
    /// Contraction produced a new degree-2 vertex: re-split along `x_1 x_{k+7}`.
    Resplit,
    /// `l >= k + 5`, recurse on the far side.
    Remainder,
    /// `l >= k + 5` and the far side is too small to need a guard.
    RemainderSmall,
    /// Degree-2 vertices deleted before recursing.
    DeleteDegree2,
    /// Smallest color class of a 3-coloring.
    ColorClass,
    /// Alternate vertices of the reduced boundary cycle.
    Alternate,
}

impl Case {
    pub fn tag(self) -> &'static str {
        match self {
            Case::Small => "small",
            Case::Split => "split",
            Case::Refine => "refine",
            Case::Contract => "contract",
            Case::DeleteBlock => "delete-block",
            Case::Resplit => "resplit",
            Case::Remainder => "remainder",
            Case::RemainderSmall => "remainder-small",
            Case::DeleteDegree2 => "delete-degree2",
            Case::ColorClass => "color-class",
            Case::Alternate => "alternate",
        }
    }
}

/// One recorded proof step. Vertex indices are local to the sub-instance
/// of order `order` at recursion depth `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: usize,
    pub case: Case,
    pub order: usize,
    pub cut: Option<(usize, usize)>,
    pub apex: Option<usize>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} n={}", self.depth, self.case.tag(), self.order)?;
        match self.cut {
            Some((a, b)) => write!(f, " cut={a}-{b}")?,
            None => write!(f, " cut=-")?,
        }
        match self.apex {
            Some(j) => write!(f, " apex={j}"),
            None => write!(f, " apex=-"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedSolution {
    pub set: VertexSet,
    /// `None` for domination results.
    pub k: Option<usize>,
    pub bound_kind: BoundKind,
    pub bound_value: Ratio<u64>,
    /// Whether the order preconditions of the bound hold. Every bound is
    /// then met, except the domination bound `(n - n_2) / 2` on the
    /// instances described at [`dominate_half_minus`].
    pub bound_applies: bool,
    pub trace: Vec<TraceStep>,
}

impl BoundedSolution {
    pub fn bound_floor(&self) -> u64 {
        self.bound_value.to_integer()
    }

    pub fn within_bound(&self) -> bool {
        self.set.len() as u64 <= self.bound_floor()
    }

    /// The trace as a line-oriented log.
    pub fn trace_log(&self) -> String {
        let mut out = String::new();
        for step in &self.trace {
            out.push_str(&step.to_string());
            out.push('\n');
        }
        out
    }
}

fn ratio(num: usize, den: usize) -> Ratio<u64> {
    Ratio::new(num as u64, den as u64)
}

pub fn order_bound(n: usize, k: usize) -> Ratio<u64> {
    ratio(n, k + 4)
}

pub fn order_plus_n2_bound(n: usize, n2: usize, k: usize) -> Ratio<u64> {
    ratio(n + n2, k + 5)
}

pub fn order_minus_n2_bound(n: usize, n2: usize, k: usize) -> Ratio<u64> {
    ratio(n - n2, k + 2)
}

#[derive(Default)]
struct Tracer {
    steps: Vec<TraceStep>,
}

impl Tracer {
    fn push(&mut self, depth: usize, case: Case, order: usize, cut: Option<(usize, usize)>, apex: Option<usize>) {
        self.steps.push(TraceStep { depth, case, order, cut, apex });
    }
}

fn verify_isolating(g: &Mop, set: &VertexSet, k: usize, what: &str) -> Result<()> {
    let iso = g.is_isolating(set, k)?;
    if iso.isolating {
        Ok(())
    } else {
        Err(Error::Verification(format!(
            "{what}: set {set} leaves residual max degree {} > {k} on a mop of order {}",
            iso.residual_max_degree,
            g.n()
        )))
    }
}

fn finish(
    g: &Mop,
    set: VertexSet,
    k: Option<usize>,
    bound_kind: BoundKind,
    bound_value: Ratio<u64>,
    bound_applies: bool,
    trace: Vec<TraceStep>,
) -> Result<BoundedSolution> {
    match k {
        Some(k) => verify_isolating(g, &set, k, bound_kind.name())?,
        None => {
            if !g.is_dominating(&set)? {
                return Err(Error::Verification(format!("{bound_kind}: set {set} does not dominate")));
            }
        }
    }
    let sol = BoundedSolution { set, k, bound_kind, bound_value, bound_applies, trace };
    if bound_applies && !sol.within_bound() {
        return Err(Error::Verification(format!(
            "{bound_kind}: size {} exceeds floor({}) on order {}",
            sol.set.len(),
            sol.bound_value,
            g.n()
        )));
    }
    Ok(sol)
}

/// Returns `{}` when already isolating, otherwise the first single vertex
/// that isolates. Valid for `n <= 2k + 7`, where one vertex always suffices.
pub fn isolate_small(g: &Mop, k: usize) -> Result<VertexSet> {
    if g.n() > 2 * k + 7 {
        return Err(Error::TooLarge { n: g.n(), max: 2 * k + 7 });
    }
    small_scan(g, k)
}

fn small_scan(g: &Mop, k: usize) -> Result<VertexSet> {
    let empty = VertexSet::new();
    if g.residual_max_degree(&empty)? <= k as isize {
        return Ok(empty);
    }
    for v in 0..g.n() {
        let s = VertexSet::singleton(v);
        if g.residual_max_degree(&s)? <= k as isize {
            return Ok(s);
        }
    }
    Err(Error::Verification(format!("no single vertex isolates a mop of order {} for k = {k}", g.n())))
}

/// Boundary walk `x_1, x_2, ...` starting at `start`, in either direction.
#[derive(Clone, Copy, Debug)]
struct Frame {
    n: usize,
    start: usize,
    forward: bool,
}

impl Frame {
    fn forward(n: usize, start: usize) -> Self {
        Self { n, start, forward: true }
    }

    /// `x_m` for 1-based `m`.
    fn x(&self, m: usize) -> usize {
        let off = (m - 1) % self.n;
        if self.forward {
            (self.start + off) % self.n
        } else {
            (self.start + self.n - off) % self.n
        }
    }

    /// 1-based position of vertex `v`.
    fn pos(&self, v: usize) -> usize {
        let off = if self.forward { (v + self.n - self.start) % self.n } else { (self.start + self.n - v) % self.n };
        off + 1
    }

    /// Same cycle walked the other way, starting at `x_m`.
    fn mirrored_at(&self, m: usize) -> Self {
        Self { n: self.n, start: self.x(m), forward: !self.forward }
    }

    /// Sorted vertex list for positions `1` and `from..=n`.
    fn first_and_tail(&self, from: usize) -> Vec<usize> {
        let mut v: Vec<usize> = std::iter::once(self.x(1)).chain((from..=self.n).map(|m| self.x(m))).collect();
        v.sort_unstable();
        v
    }

    fn range(&self, from: usize, to: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (from..=to).map(|m| self.x(m)).collect();
        v.sort_unstable();
        v
    }
}

/// Position of the apex of the face on the chord `x_1 x_{l+1}` that lies on
/// the `x_2..x_l` side.
fn inner_apex(g: &Mop, f: &Frame, l: usize) -> usize {
    let (u, v) = (f.x(1), f.x(l + 1));
    g.neighbors(u)
        .iter()
        .filter(|&&w| g.has_edge(w, v))
        .map(|&w| f.pos(w))
        .find(|&p| (2..=l).contains(&p))
        .expect("chord bounds a face on each side")
}

/// Splits with `r = k + 2` and shortens the cut until either `l = k + 4`
/// or the apex position `j` lies in `[t + 2, k + 4]`, `t = l - (k + 4)`.
/// Returns the final frame, `l` and `j`.
fn split_and_refine(g: &Mop, k: usize, depth: usize, tr: &mut Tracer) -> Result<(Frame, usize, usize)> {
    let n = g.n();
    let chord: SplittingChord = g.splitting_diagonal(k + 2)?;
    let mut frame = Frame::forward(n, chord.start);
    let mut l = chord.len;
    tr.push(depth, Case::Split, n, Some((frame.x(1), frame.x(l + 1))), None);
    loop {
        let j = inner_apex(g, &frame, l);
        if l == k + 4 {
            return Ok((frame, l, j));
        }
        let t = l - (k + 4);
        if (t + 2..=k + 4).contains(&j) {
            return Ok((frame, l, j));
        }
        if j >= k + 5 {
            l = j - 1;
        } else {
            frame = Frame::forward(n, frame.x(j));
            l = l + 1 - j;
        }
        tr.push(depth, Case::Refine, n, Some((frame.x(1), frame.x(l + 1))), Some(j));
    }
}

fn lift(map: &VertexMap, set: &VertexSet) -> VertexSet {
    map.lift(set)
}

fn order_rec(g: &Mop, k: usize, depth: usize, tr: &mut Tracer) -> Result<VertexSet> {
    let n = g.n();
    if n <= 2 * k + 7 {
        tr.push(depth, Case::Small, n, None, None);
        return small_scan(g, k);
    }
    let (f, l, j) = split_and_refine(g, k, depth, tr)?;
    let xj = f.x(j);
    if l == k + 4 {
        let (g2, map2) = g.induced(&f.first_and_tail(k + 5))?;
        let a = map2.child_of(f.x(1)).expect("x_1 in G_2");
        let b = map2.child_of(f.x(k + 5)).expect("x_{k+5} in G_2");
        let (gc, mapc) = g2.contract_boundary_edge((a, b))?;
        tr.push(depth, Case::Contract, n, Some((f.x(1), f.x(k + 5))), Some(xj));
        let z = mapc.merge().expect("contraction merges").child;
        let sub = order_rec(&gc, k, depth + 1, tr)?;
        let mut out = lift(&map2, &lift(&mapc, &sub));
        if !sub.contains(z) {
            out.insert(xj);
        }
        Ok(out)
    } else {
        remainder(g, k, depth, tr, &f, l, j, order_rec)
    }
}

type Recurse = fn(&Mop, usize, usize, &mut Tracer) -> Result<VertexSet>;

/// `l >= k + 5` with the apex in range: guard `x_j` and recurse on the side
/// `x_1, x_{l+1}, ..., x_n`.
#[allow(clippy::too_many_arguments)]
fn remainder(
    g: &Mop,
    k: usize,
    depth: usize,
    tr: &mut Tracer,
    f: &Frame,
    l: usize,
    j: usize,
    rec: Recurse,
) -> Result<VertexSet> {
    let n = g.n();
    let xj = f.x(j);
    let rest = n - (l - 1);
    if rest <= k + 3 {
        tr.push(depth, Case::RemainderSmall, n, Some((f.x(1), f.x(l + 1))), Some(xj));
        return Ok(VertexSet::singleton(xj));
    }
    tr.push(depth, Case::Remainder, n, Some((f.x(1), f.x(l + 1))), Some(xj));
    let (g2, map2) = g.induced(&f.first_and_tail(l + 1))?;
    let sub = rec(&g2, k, depth + 1, tr)?;
    let mut out = lift(&map2, &sub);
    out.insert(xj);
    Ok(out)
}

fn plus_rec(g: &Mop, k: usize, depth: usize, tr: &mut Tracer) -> Result<VertexSet> {
    let n = g.n();
    if n <= 2 * k + 7 {
        tr.push(depth, Case::Small, n, None, None);
        return small_scan(g, k);
    }
    let (f, l, j) = split_and_refine(g, k, depth, tr)?;
    if l > k + 4 {
        return remainder(g, k, depth, tr, &f, l, j, plus_rec);
    }
    let xj = f.x(j);
    let (x1, x5) = (f.x(1), f.x(k + 5));
    let (g2, map2) = g.induced(&f.first_and_tail(k + 5))?;
    let a = map2.child_of(x1).expect("x_1 in G_2");
    let b = map2.child_of(x5).expect("x_{k+5} in G_2");
    if g2.neighbors(a).len() + g2.neighbors(b).len() == 5 {
        // Both orientations leave exactly x_{k+6}..x_n.
        tr.push(depth, Case::DeleteBlock, n, Some((x1, x5)), Some(xj));
        let (gp, mapp) = g.induced(&f.range(k + 6, n))?;
        let sub = plus_rec(&gp, k, depth + 1, tr)?;
        let mut out = lift(&mapp, &sub);
        out.insert(xj);
        return Ok(out);
    }
    let (gc, mapc) = g2.contract_boundary_edge((a, b))?;
    let y = mapc.merge().expect("contraction merges").child;
    let new_deg2 = (0..gc.n())
        .find(|&w| w != y && gc.neighbors(w).len() == 2 && g.neighbors(map2.parent(mapc.parent(w))).len() != 2);
    match new_deg2 {
        None => {
            tr.push(depth, Case::Contract, n, Some((x1, x5)), Some(xj));
            let sub = plus_rec(&gc, k, depth + 1, tr)?;
            let mut out = lift(&map2, &lift(&mapc, &sub));
            if !sub.contains(y) {
                out.insert(xj);
            }
            Ok(out)
        }
        Some(w) => {
            let z = map2.parent(mapc.parent(w));
            // Orient so that z = x_{k+6}.
            let (h, jh) = if z == f.x(k + 6) {
                (f, j)
            } else {
                debug_assert_eq!(z, f.x(n));
                (f.mirrored_at(k + 5), k + 6 - j)
            };
            debug_assert!(g.has_edge(h.x(1), h.x(k + 7)));
            let star = if jh == 2 { h.x(k + 5) } else { h.x(1) };
            tr.push(depth, Case::Resplit, n, Some((h.x(1), h.x(k + 7))), Some(star));
            let (gh, maph) = g.induced(&h.first_and_tail(k + 7))?;
            let sub = plus_rec(&gh, k, depth + 1, tr)?;
            let mut out = lift(&maph, &sub);
            out.insert(star);
            Ok(out)
        }
    }
}

fn too_small_check(g: &Mop) -> Result<()> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    Ok(())
}

/// Isolating set of size at most `floor(n / (k + 4))` when `n >= k + 4`.
pub fn isolate_order(g: &Mop, k: usize) -> Result<BoundedSolution> {
    too_small_check(g)?;
    let mut tr = Tracer::default();
    let set = order_rec(g, k, 0, &mut tr)?;
    finish(g, set, Some(k), BoundKind::Order, order_bound(g.n(), k), g.n() >= k + 4, tr.steps)
}

/// Isolating set of size at most `floor((n + n_2) / (k + 5))` when `n >= k + 3`.
pub fn isolate_order_plus_n2(g: &Mop, k: usize) -> Result<BoundedSolution> {
    too_small_check(g)?;
    let mut tr = Tracer::default();
    let set = plus_rec(g, k, 0, &mut tr)?;
    let bound = order_plus_n2_bound(g.n(), g.n2(), k);
    finish(g, set, Some(k), BoundKind::OrderPlusN2, bound, g.n() >= k + 3, tr.steps)
}

/// Isolating set of size at most `floor((n - n_2) / (k + 2))`; needs
/// `k >= 1` and `n >= 2k + 3`.
pub fn isolate_order_minus_n2(g: &Mop, k: usize) -> Result<BoundedSolution> {
    if k < 1 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    if g.n() < 2 * k + 3 {
        return Err(Error::TooSmall { n: g.n(), min: 2 * k + 3 });
    }
    let (reduced, map) = g.delete_all_degree2()?;
    let mut trace = vec![TraceStep { depth: 0, case: Case::DeleteDegree2, order: g.n(), cut: None, apex: None }];
    let inner = if k == 1 { dominate_third(&reduced)? } else { isolate_order(&reduced, k - 2)? };
    trace.extend(inner.trace.into_iter().map(|mut s| {
        s.depth += 1;
        s
    }));
    let set = map.lift(&inner.set);
    let bound = order_minus_n2_bound(g.n(), g.n2(), k);
    finish(g, set, Some(k), BoundKind::OrderMinusN2, bound, true, trace)
}

/// Runs every applicable algorithm and keeps the smallest set (earliest on
/// ties, in the order: order, plus, minus).
pub fn isolate_best(g: &Mop, k: usize) -> Result<BoundedSolution> {
    too_small_check(g)?;
    let (n, n2) = (g.n(), g.n2());
    let mut candidates = vec![isolate_order(g, k)?, isolate_order_plus_n2(g, k)?];
    if k >= 1 && n >= 2 * k + 3 {
        candidates.push(isolate_order_minus_n2(g, k)?);
    }
    let mut bounds = Vec::new();
    if n >= k + 4 {
        bounds.push(order_bound(n, k));
    }
    if n >= k + 3 {
        bounds.push(order_plus_n2_bound(n, n2, k));
    }
    if k >= 1 && n >= 2 * k + 3 {
        bounds.push(order_minus_n2_bound(n, n2, k));
    }
    let applies = !bounds.is_empty();
    let bound = bounds.into_iter().min().unwrap_or_else(|| order_bound(n, k));
    let best = candidates.into_iter().min_by_key(|c| c.set.len()).expect("at least two candidates");
    finish(g, best.set, Some(k), BoundKind::Best, bound, applies, best.trace)
}

/// Smallest color class of a face-trichromatic 3-coloring.
pub fn dominate_third(g: &Mop) -> Result<BoundedSolution> {
    too_small_check(g)?;
    let colors = three_coloring(g);
    let mut classes: [Vec<usize>; 3] = Default::default();
    for (v, &c) in colors.iter().enumerate() {
        classes[c as usize].push(v);
    }
    let smallest = classes.iter().min_by_key(|c| c.len()).expect("three classes");
    let set: VertexSet = smallest.iter().copied().collect();
    let trace = vec![TraceStep { depth: 0, case: Case::ColorClass, order: g.n(), cut: None, apex: None }];
    finish(g, set, None, BoundKind::DomThird, ratio(g.n(), 3), true, trace)
}

/// Every second vertex of the boundary cycle `y_0 .. y_{m-1}` of `G - V_2`.
///
/// For even `m` this is `y_1, y_3, ..`. For odd `m` exactly one pair of
/// consecutive cycle vertices is left out; the pair is placed on an edge
/// that carries no ear, preferring `y_{m-1} y_0`. When every cycle edge
/// carries an ear and `m` is odd, no dominating set of size `floor(m / 2)`
/// exists (the ears force a vertex cover of an odd cycle), so one more
/// vertex is taken and the result lies outside the bound.
pub fn dominate_half_minus(g: &Mop) -> Result<BoundedSolution> {
    if g.n() < 4 {
        return Err(Error::TooSmall { n: g.n(), min: 4 });
    }
    // Deleting ears keeps the cyclic order, so the reduced boundary cycle is
    // the surviving vertices in increasing order.
    let kept = g.without_degree2();
    let m = kept.len();
    let n = g.n();
    let eared = |i: usize| (kept[(i + 1) % m] + n - kept[i]) % n > 1;
    let (positions, attainable): (Vec<usize>, bool) = if m.is_multiple_of(2) {
        ((1..m).step_by(2).collect(), true)
    } else {
        match std::iter::once(m - 1).chain(0..m - 1).find(|&i| !eared(i)) {
            Some(i) => ((1..m / 2 + 1).map(|j| (i + 2 * j) % m).collect(), true),
            None => ((0..m).step_by(2).collect(), false),
        }
    };
    let set: VertexSet = positions.into_iter().map(|p| kept[p]).collect();
    let trace = vec![TraceStep { depth: 0, case: Case::Alternate, order: n, cut: None, apex: None }];
    if attainable {
        return finish(g, set, None, BoundKind::DomHalf, ratio(m, 2), true, trace);
    }
    // The set is one over the bound; it is still checked to dominate.
    let sol = finish(g, set, None, BoundKind::DomHalf, ratio(m + 1, 2), true, trace)?;
    Ok(BoundedSolution { bound_value: ratio(m, 2), ..sol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn fan(n: usize) -> Mop {
        families::fan(n).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(isolate_small(&Mop::triangle(), 0).unwrap().len(), 1);
        assert_eq!(isolate_small(&fan(5), 2).unwrap(), VertexSet::singleton(0));
        assert!(isolate_small(&Mop::triangle(), 2).unwrap().is_empty());
        assert_eq!(isolate_small(&fan(8), 0), Err(Error::TooLarge { n: 8, max: 7 }));
    }

    #[test]
    fn fan_examples() {
        let s = isolate_order(&fan(7), 3).unwrap();
        assert_eq!(s.set.len(), 1);
        let s = isolate_order_minus_n2(&fan(7), 2).unwrap();
        assert_eq!(s.set.len(), 1);
        assert!(s.within_bound());
        let s = dominate_half_minus(&fan(6)).unwrap();
        assert_eq!(s.set.len(), 2);
        let s = dominate_third(&fan(6)).unwrap();
        assert!(s.set.len() <= 2);
        // Triangle with an ear on every side: two guards are needed.
        let sun = Mop::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap();
        let s = dominate_half_minus(&sun).unwrap();
        assert_eq!(s.set.len(), 2);
        assert!(!s.within_bound());
        assert_eq!(dominate_third(&Mop::triangle()).unwrap().set.len(), 1);
    }

    #[test]
    fn minus_preconditions() {
        assert_eq!(isolate_order_minus_n2(&fan(9), 0), Err(Error::KTooSmall { k: 0, min: 1 }));
        assert_eq!(isolate_order_minus_n2(&fan(6), 2), Err(Error::TooSmall { n: 6, min: 7 }));
    }

    #[test]
    fn trace_lines() {
        let g = families::family_t(0, 4).unwrap();
        let s = isolate_order(&g, 0).unwrap();
        let log = s.trace_log();
        assert!(log.lines().count() >= 2);
        assert!(log.lines().all(|l| l.contains(" n=") && l.contains("cut=") && l.contains("apex=")));
    }

    #[test]
    fn frame_positions_round_trip() {
        for forward in [true, false] {
            let f = Frame { n: 9, start: 4, forward };
            for m in 1..=9 {
                assert_eq!(f.pos(f.x(m)), m);
            }
            let mirrored = f.mirrored_at(3);
            assert_eq!(mirrored.x(1), f.x(3));
            assert_eq!(mirrored.x(3), f.x(1));
        }
    }
}
