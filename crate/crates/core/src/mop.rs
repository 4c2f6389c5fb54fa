//! The canonical mop model and its structural surgery.
//!
//! Vertices are `0..n` and the boundary (Hamiltonian) cycle is always
//! `0, 1, ..., n-1, 0`. Every operation that produces a new mop relabels it
//! canonically and hands back an explicit map to the parent's indices.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    /// Checks every member against a mop of order `n`.
    pub fn check(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&index) if index >= n => Err(Error::InvalidIndex { index, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Two parent vertices merged into one child vertex by an edge contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Merge {
    pub child: usize,
    pub parents: (usize, usize),
}

/// Child-index to parent-index map produced by deletion, partition and
/// contraction. Injective except for the merged vertex of a contraction,
/// whose `parent` entry is the first of the two merged parents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    parent: Vec<usize>,
    merge: Option<Merge>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        Self { parent: (0..n).collect(), merge: None }
    }

    pub fn parent(&self, child: usize) -> usize {
        self.parent[child]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    pub fn merge(&self) -> Option<Merge> {
        self.merge
    }

    /// Child index of a parent vertex, if it survived (merged parents both
    /// resolve to the merged child).
    pub fn child_of(&self, parent: usize) -> Option<usize> {
        if let Some(m) = self.merge {
            if parent == m.parents.0 || parent == m.parents.1 {
                return Some(m.child);
            }
        }
        self.parent.iter().position(|&p| p == parent)
    }

    /// Maps a child set to parent indices. A merged child maps to both parents.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(set.len() + 1);
        for c in set.iter() {
            match self.merge {
                Some(m) if m.child == c => {
                    out.push(m.parents.0);
                    out.push(m.parents.1);
                }
                _ => out.push(self.parent[c]),
            }
        }
        out.into_iter().collect()
    }
}

/// Result of cutting a mop along a diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSplit {
    pub g1: Mop,
    pub g2: Mop,
    pub map1: Vec<usize>,
    pub map2: Vec<usize>,
    pub cut: (usize, usize),
}

/// A chord `x_start x_{start+len}` (indices mod n) cutting off a side that
/// carries exactly `len` boundary edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplittingChord {
    pub start: usize,
    pub len: usize,
    n: usize,
}

impl SplittingChord {
    pub fn end(&self) -> usize {
        (self.start + self.len) % self.n
    }

    /// The chord as a normalized pair `(a, b)` with `a < b`.
    pub fn chord(&self) -> (usize, usize) {
        ordered(self.start, self.end())
    }
}

/// Third vertices of the faces incident to an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Apex {
    Boundary(usize),
    Diagonal(usize, usize),
}

/// Outcome of an isolation check. `residual_max_degree` is `-1` when the
/// residual graph is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Isolation {
    pub isolating: bool,
    pub residual_max_degree: isize,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A maximal outerplanar graph as a triangulation of the polygon `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mop {
    n: usize,
    diagonals: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl fmt::Debug for Mop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Mop").field("n", &self.n).field("diagonals", &self.diagonals).finish()
    }
}

impl Mop {
    /// Validates `n` and a diagonal set against the mop invariants.
    pub fn new<I>(n: usize, diagonals: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let mut diags = Vec::new();
        for (a, b) in diagonals {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::InvalidIndex { index, n });
                }
            }
            let (a, b) = ordered(a, b);
            if b - a < 2 || (a == 0 && b == n - 1) {
                return Err(Error::InvalidDiagonal((a, b)));
            }
            diags.push((a, b));
        }
        diags.sort_unstable();
        if let Some(w) = diags.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidDiagonal(w[0]));
        }
        if diags.len() != n - 3 {
            return Err(Error::WrongDiagonalCount { expected: n - 3, found: diags.len() });
        }
        check_non_crossing(&diags)?;

        let mut adjacency: Vec<Vec<usize>> = (0..n).map(|v| vec![(v + 1) % n, (v + n - 1) % n]).collect();
        for &(a, b) in &diags {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { n, diagonals: diags, adjacency })
    }

    pub fn triangle() -> Self {
        Self::new(3, []).expect("triangle is a mop")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted diagonals `(a, b)`, `a < b`.
    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges as ordered pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(2 * self.n - 3);
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&w| w > u).map(|&w| (u, w)));
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::InvalidIndex { index: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn is_boundary_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && ((u + 1) % self.n == v || (v + 1) % self.n == u)
    }

    pub fn is_diagonal(&self, u: usize, v: usize) -> bool {
        self.diagonals.binary_search(&ordered(u, v)).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree2_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adjacency[v].len() == 2).collect()
    }

    pub fn n2(&self) -> usize {
        self.adjacency.iter().filter(|l| l.len() == 2).count()
    }

    /// Triangular faces `(a, b, c)` with `a < b < c`, sorted.
    pub fn faces(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.n - 2);
        for (u, v) in self.edges() {
            for w in self.common_neighbors(u, v) {
                if w > v {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(2);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn closed_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        set.check(self.n)?;
        let mut out: BTreeSet<usize> = set.iter().collect();
        for v in set.iter() {
            out.extend(self.adjacency[v].iter().copied());
        }
        Ok(out.into_iter().collect())
    }

    pub(crate) fn dominated_mask(&self, set: &VertexSet) -> Vec<bool> {
        let mut dominated = vec![false; self.n];
        for v in set.iter() {
            dominated[v] = true;
            for &w in &self.adjacency[v] {
                dominated[w] = true;
            }
        }
        dominated
    }

    /// Maximum degree of `G - N[set]`, `-1` for an empty residual graph.
    pub fn residual_max_degree(&self, set: &VertexSet) -> Result<isize> {
        set.check(self.n)?;
        let dominated = self.dominated_mask(set);
        let mut best = -1isize;
        for v in (0..self.n).filter(|&v| !dominated[v]) {
            let d = self.adjacency[v].iter().filter(|&&w| !dominated[w]).count() as isize;
            best = best.max(d);
        }
        Ok(best)
    }

    /// Whether `set` is a `K_{1,k+1}`-isolating set, i.e. `Δ(G - N[set]) <= k`.
    pub fn is_isolating(&self, set: &VertexSet, k: usize) -> Result<Isolation> {
        let residual_max_degree = self.residual_max_degree(set)?;
        Ok(Isolation { isolating: residual_max_degree <= k as isize, residual_max_degree })
    }

    pub fn is_dominating(&self, set: &VertexSet) -> Result<bool> {
        set.check(self.n)?;
        Ok(self.dominated_mask(set).into_iter().all(|d| d))
    }

    /// Third vertex of each face on the edge `{u, v}`.
    pub fn apex(&self, u: usize, v: usize) -> Result<Apex> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(ordered(u, v)));
        }
        match self.common_neighbors(u, v).as_slice() {
            [w] => Ok(Apex::Boundary(*w)),
            [w1, w2] => Ok(Apex::Diagonal(*w1, *w2)),
            other => unreachable!("edge of a mop with {} apices", other.len()),
        }
    }

    /// Sub-mop induced by `vertices` (sorted ascending), whose boundary
    /// cycle must follow the ascending order.
    pub(crate) fn induced(&self, vertices: &[usize]) -> Result<(Mop, VertexMap)> {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let m = vertices.len();
        let mut child = vec![usize::MAX; self.n];
        for (c, &p) in vertices.iter().enumerate() {
            child[p] = c;
        }
        let mut diags = Vec::with_capacity(m.saturating_sub(3));
        for &p in vertices {
            for &q in &self.adjacency[p] {
                if q > p && child[q] != usize::MAX {
                    let (a, b) = (child[p], child[q]);
                    if b - a >= 2 && !(a == 0 && b == m - 1) {
                        diags.push((a, b));
                    }
                }
            }
        }
        let sub = Mop::new(m, diags)?;
        Ok((sub, VertexMap { parent: vertices.to_vec(), merge: None }))
    }

    /// Cuts the mop along the diagonal `d = {a, b}`. `g1` holds parent
    /// vertices `a..=b`, `g2` holds `0..=a` and `b..n`; both keep the
    /// parent's relative order.
    pub fn diagonal_partition(&self, d: (usize, usize)) -> Result<DiagonalSplit> {
        let (a, b) = ordered(d.0, d.1);
        if !self.is_diagonal(a, b) {
            return Err(Error::NotADiagonal((a, b)));
        }
        let side1: Vec<usize> = (a..=b).collect();
        let side2: Vec<usize> = (0..=a).chain(b..self.n).collect();
        let (g1, map1) = self.induced(&side1)?;
        let (g2, map2) = self.induced(&side2)?;
        Ok(DiagonalSplit { g1, g2, map1: map1.parent, map2: map2.parent, cut: (a, b) })
    }

    /// Smallest `p >= r + 2` such that some chord `x_i x_{i+p}` (indices mod
    /// n) is an edge; ties go to the smallest `i`. The side `x_i..x_{i+p}`
    /// carries exactly `p` boundary edges and `r + 2 <= p <= 2r + 2`.
    pub fn splitting_diagonal(&self, r: usize) -> Result<SplittingChord> {
        let n = self.n;
        if n < 2 * r + 4 {
            return Err(Error::TooSmall { n, min: 2 * r + 4 });
        }
        let mut best: Option<(usize, usize)> = None;
        for i in 0..n {
            for &j in &self.adjacency[i] {
                let p = (j + n - i) % n;
                if p >= r + 2 && best.is_none_or(|b| (p, i) < b) {
                    best = Some((p, i));
                }
            }
        }
        let (len, start) = best.expect("boundary edge x_n x_1 always qualifies");
        Ok(SplittingChord { start, len, n })
    }

    /// Contracts the boundary edge `e`. The merged vertex takes the place of
    /// the endpoint that precedes the other along the boundary cycle.
    pub fn contract_boundary_edge(&self, e: (usize, usize)) -> Result<(Mop, VertexMap)> {
        let (u, v) = e;
        if !self.is_boundary_edge(u, v) {
            return Err(Error::NotABoundaryEdge(ordered(u, v)));
        }
        if self.n < 4 {
            return Err(Error::TooSmall { n: self.n, min: 4 });
        }
        let n = self.n;
        // `keep` precedes `gone` on the cycle.
        let (keep, gone) = if (u + 1) % n == v { (u, v) } else { (v, u) };
        let parent: Vec<usize> = (0..n).filter(|&p| p != gone).collect();
        let mut child = vec![0; n];
        for (c, &p) in parent.iter().enumerate() {
            child[p] = c;
        }
        child[gone] = child[keep];
        let m = n - 1;
        let mut diags = BTreeSet::new();
        for (x, y) in self.edges() {
            let (a, b) = ordered(child[x], child[y]);
            if b - a >= 2 && !(a == 0 && b == m - 1) {
                diags.insert((a, b));
            }
        }
        let g = Mop::new(m, diags)?;
        let merged = child[keep];
        Ok((g, VertexMap { parent, merge: Some(Merge { child: merged, parents: (keep, gone) }) }))
    }

    pub fn delete_degree2_vertex(&self, v: usize) -> Result<(Mop, VertexMap)> {
        self.check_vertex(v)?;
        let degree = self.adjacency[v].len();
        if degree != 2 {
            return Err(Error::NotDegree2 { vertex: v, degree });
        }
        if self.n < 4 {
            return Err(Error::TooSmall { n: self.n, min: 4 });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&p| p != v).collect();
        self.induced(&keep)
    }

    /// Vertices that survive deleting every degree-2 vertex, in boundary order.
    pub fn without_degree2(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adjacency[v].len() != 2).collect()
    }

    /// `G - V_2`, where `V_2` is computed once on the input. Fails with
    /// `TooSmall` when fewer than 3 vertices would remain (only for `n = 4`).
    pub fn delete_all_degree2(&self) -> Result<(Mop, VertexMap)> {
        if self.n < 4 {
            return Err(Error::TooSmall { n: self.n, min: 4 });
        }
        let keep = self.without_degree2();
        if keep.len() < 3 {
            return Err(Error::TooSmall { n: self.n, min: 5 });
        }
        self.induced(&keep)
    }

    /// Adds a new degree-2 vertex on the boundary edge `e`; returns the new
    /// mop and the index of the added vertex.
    pub fn add_ear(&self, e: (usize, usize)) -> Result<(Mop, usize)> {
        let (u, v) = e;
        if !self.is_boundary_edge(u, v) {
            return Err(Error::NotABoundaryEdge(ordered(u, v)));
        }
        let n = self.n;
        let first = if (u + 1) % n == v { u } else { v };
        // The new vertex sits right after `first` on the cycle.
        let new = first + 1;
        let shift = |p: usize| if p > first { p + 1 } else { p };
        let mut diags: Vec<(usize, usize)> = self.diagonals.iter().map(|&(a, b)| (shift(a), shift(b))).collect();
        diags.push(ordered(shift(first), shift((first + 1) % n)));
        Ok((Mop::new(n + 1, diags)?, new))
    }

    /// Relabels so that parent vertex `s` becomes 0 (rotation of the cycle).
    pub fn rotate(&self, s: usize) -> Mop {
        let n = self.n;
        let diags = self.diagonals.iter().map(|&(a, b)| ((a + n - s) % n, (b + n - s) % n));
        Mop::new(n, diags).expect("rotation preserves validity")
    }
}

/// Rejects interleaving pairs in a sorted diagonal list with a stack sweep.
fn check_non_crossing(diags: &[(usize, usize)]) -> Result<()> {
    let mut sorted = diags.to_vec();
    // Nested intervals must appear outer-first.
    sorted.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in &sorted {
        while let Some(&(_, tb)) = stack.last() {
            if tb <= a {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = stack.last() {
            if top.1 < b {
                return Err(Error::CrossingDiagonals(top, (a, b)));
            }
        }
        stack.push((a, b));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan6() -> Mop {
        Mop::new(6, [(0, 2), (0, 3), (0, 4)]).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn validate_examples() {
        let t = Mop::new(3, []).unwrap();
        assert_eq!(t.edge_count(), 3);
        let f = fan6();
        assert_eq!(f.degree(0).unwrap(), 5);
        assert_eq!(Mop::new(6, [(0, 2), (1, 3), (0, 4)]), Err(Error::CrossingDiagonals((0, 2), (1, 3))));
        assert_eq!(Mop::new(2, []), Err(Error::TooFewVertices(2)));
        assert_eq!(Mop::new(6, [(0, 2), (0, 3)]), Err(Error::WrongDiagonalCount { expected: 3, found: 2 }));
        assert_eq!(Mop::new(6, [(0, 2), (0, 3), (0, 9)]), Err(Error::InvalidIndex { index: 9, n: 6 }));
        assert_eq!(Mop::new(6, [(0, 2), (0, 3), (0, 5)]), Err(Error::InvalidDiagonal((0, 5))));
        assert_eq!(Mop::new(6, [(0, 2), (0, 3), (3, 2)]), Err(Error::InvalidDiagonal((2, 3))));
        assert_eq!(Mop::new(6, [(0, 2), (0, 2), (0, 4)]), Err(Error::InvalidDiagonal((0, 2))));
    }

    #[test]
    fn crossing_detection_nested_and_shared_endpoints() {
        // Nested and endpoint-sharing chords are fine.
        assert!(Mop::new(7, [(0, 5), (1, 5), (1, 4), (2, 4)]).is_ok());
        assert!(matches!(Mop::new(7, [(0, 3), (1, 5), (0, 5), (1, 3)]), Err(Error::CrossingDiagonals(..))));
    }

    #[test]
    fn degrees_and_degree2() {
        let f = fan6();
        assert_eq!(f.degree(1).unwrap(), 2);
        assert_eq!(f.degree(2).unwrap(), 3);
        assert_eq!(f.degree(6), Err(Error::InvalidIndex { index: 6, n: 6 }));
        assert_eq!(f.degree2_vertices(), set(&[1, 5]));
        assert_eq!(Mop::triangle().degree2_vertices(), set(&[0, 1, 2]));
    }

    #[test]
    fn neighborhoods_and_predicates() {
        let f = fan6();
        assert_eq!(f.closed_neighborhood(&set(&[0])).unwrap(), set(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(f.closed_neighborhood(&set(&[])).unwrap(), set(&[]));
        assert_eq!(f.closed_neighborhood(&set(&[1])).unwrap(), set(&[0, 1, 2]));
        assert_eq!(f.is_isolating(&set(&[0]), 0).unwrap(), Isolation { isolating: true, residual_max_degree: -1 });
        assert_eq!(f.is_isolating(&set(&[]), 2).unwrap(), Isolation { isolating: false, residual_max_degree: 5 });
        assert!(f.is_dominating(&set(&[0])).unwrap());
        assert!(!f.is_dominating(&set(&[1])).unwrap());
        assert!(Mop::triangle().is_dominating(&set(&[2])).unwrap());
        assert_eq!(f.is_dominating(&set(&[7])), Err(Error::InvalidIndex { index: 7, n: 6 }));
    }

    #[test]
    fn apex_examples() {
        let f = fan6();
        assert_eq!(f.apex(0, 5).unwrap(), Apex::Boundary(4));
        assert_eq!(f.apex(0, 3).unwrap(), Apex::Diagonal(2, 4));
        assert_eq!(Mop::triangle().apex(0, 1).unwrap(), Apex::Boundary(2));
        assert_eq!(f.apex(1, 3), Err(Error::NotAnEdge((1, 3))));
    }

    #[test]
    fn partition_examples() {
        let f = fan6();
        let s = f.diagonal_partition((0, 3)).unwrap();
        assert_eq!(s.map1, vec![0, 1, 2, 3]);
        assert_eq!(s.map2, vec![0, 3, 4, 5]);
        assert_eq!(s.g1, Mop::new(4, [(0, 2)]).unwrap());
        assert_eq!(s.g2, Mop::new(4, [(0, 2)]).unwrap());
        let s = f.diagonal_partition((0, 2)).unwrap();
        assert_eq!(s.g1, Mop::triangle());
        assert_eq!(s.g2.n(), 5);
        assert_eq!(s.g2.degree(0).unwrap(), 4);
        assert_eq!(f.diagonal_partition((0, 1)), Err(Error::NotADiagonal((0, 1))));
    }

    #[test]
    fn splitting_examples() {
        let f10 = Mop::new(10, (2..=8).map(|i| (0, i))).unwrap();
        let c = f10.splitting_diagonal(2).unwrap();
        assert_eq!((c.chord(), c.len), ((0, 4), 4));
        let c = f10.splitting_diagonal(3).unwrap();
        assert_eq!((c.chord(), c.len), ((0, 5), 5));
        assert_eq!(f10.splitting_diagonal(4), Err(Error::TooSmall { n: 10, min: 12 }));
    }

    #[test]
    fn contraction_examples() {
        let f = fan6();
        let (g, map) = f.contract_boundary_edge((4, 5)).unwrap();
        assert_eq!(g, Mop::new(5, [(0, 2), (0, 3)]).unwrap());
        let m = map.merge().unwrap();
        assert_eq!(m.parents, (4, 5));
        assert_eq!(g.neighbors(m.child), &[0, 3]);
        let sq = Mop::new(4, [(0, 2)]).unwrap();
        let (g, _) = sq.contract_boundary_edge((2, 3)).unwrap();
        assert_eq!(g, Mop::triangle());
        assert_eq!(f.contract_boundary_edge((0, 2)), Err(Error::NotABoundaryEdge((0, 2))));
        assert_eq!(Mop::triangle().contract_boundary_edge((0, 1)), Err(Error::TooSmall { n: 3, min: 4 }));
    }

    #[test]
    fn deletion_and_ears() {
        let f = fan6();
        let f5 = Mop::new(5, [(0, 2), (0, 3)]).unwrap();
        assert_eq!(f.delete_degree2_vertex(5).unwrap().0, f5);
        let (g, map) = f.delete_degree2_vertex(1).unwrap();
        assert_eq!(map.parents(), &[0, 2, 3, 4, 5]);
        assert_eq!(g.degree(0).unwrap(), 4);
        assert_eq!(f.delete_degree2_vertex(0), Err(Error::NotDegree2 { vertex: 0, degree: 5 }));
        let (g, map) = f.delete_all_degree2().unwrap();
        assert_eq!(map.parents(), &[0, 2, 3, 4]);
        assert_eq!(g, Mop::new(4, [(0, 2)]).unwrap());
        let (sq, new) = Mop::triangle().add_ear((0, 1)).unwrap();
        assert_eq!((sq, new), (Mop::new(4, [(0, 2)]).unwrap(), 1));
        let (g6, new) = f5.add_ear((2, 3)).unwrap();
        assert_eq!(g6.n(), 6);
        assert_eq!(g6.delete_degree2_vertex(new).unwrap().0, f5);
        let (g6, new) = f5.add_ear((4, 0)).unwrap();
        assert_eq!(new, 5);
        assert_eq!(g6.delete_degree2_vertex(new).unwrap().0, f5);
    }

    #[test]
    fn faces_of_fan() {
        assert_eq!(fan6().faces(), vec![(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]);
    }
}
