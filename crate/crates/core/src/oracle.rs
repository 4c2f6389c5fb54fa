//! Exact isolation and domination numbers by size-ordered search.
//!
//! For `s = 0, 1, 2, ...` the search asks whether some set of size `s`
//! works. Branching picks a violating vertex `v` of the current residual
//! graph; any completion must contain a vertex of `N[v]` (to dominate `v`)
//! or of `N[u]` for a residual neighbor `u` of `v` (to shrink its residual
//! degree), so only those candidates are tried.

use crate::error::{Error, Result};
use crate::mop::{Mop, VertexSet};

pub const DEFAULT_LIMIT: usize = 24;
const MAX_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub value: usize,
    pub witness: VertexSet,
    /// Number of search nodes whose residual graph was evaluated.
    pub explored: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { limit: DEFAULT_LIMIT }
    }
}

impl Oracle {
    /// Oracle accepting instances up to `limit` vertices (at most 64).
    pub fn with_limit(limit: usize) -> Result<Self> {
        if limit > MAX_LIMIT {
            return Err(Error::BadParams(format!("oracle limit {limit} exceeds {MAX_LIMIT}")));
        }
        Ok(Self { limit })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// `ι_k(G)`, the size of a smallest `K_{1,k+1}`-isolating set.
    pub fn isolation_number(&self, g: &Mop, k: usize) -> Result<ExactResult> {
        self.run(g, k as isize)
    }

    /// `γ(G)`, the size of a smallest dominating set.
    pub fn domination_number(&self, g: &Mop) -> Result<ExactResult> {
        self.run(g, -1)
    }

    fn run(&self, g: &Mop, k: isize) -> Result<ExactResult> {
        if g.n() > self.limit {
            return Err(Error::LimitExceeded { n: g.n(), limit: self.limit });
        }
        let search = Search::new(g, k);
        let mut explored = 0;
        for budget in 0..=g.n() {
            if let Some(mask) = search.dfs(0, 0, budget, &mut explored) {
                let witness: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
                return Ok(ExactResult { value: witness.len(), witness, explored });
            }
        }
        unreachable!("the full vertex set always isolates")
    }
}

pub fn exact_isolation_number(g: &Mop, k: usize) -> Result<ExactResult> {
    Oracle::default().isolation_number(g, k)
}

pub fn exact_domination_number(g: &Mop) -> Result<ExactResult> {
    Oracle::default().domination_number(g)
}

struct Search {
    all: u64,
    open: Vec<u64>,
    closed: Vec<u64>,
    k: isize,
}

impl Search {
    fn new(g: &Mop, k: isize) -> Self {
        let n = g.n();
        let open: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        let closed = open.iter().enumerate().map(|(v, m)| m | 1 << v).collect();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self { all, open, closed, k }
    }

    /// Candidate set of the most constrained violator, or `None` when the
    /// residual graph already has max degree at most `k`.
    fn branch_candidates(&self, dominated: u64) -> Option<u64> {
        let residual = self.all & !dominated;
        let mut best: Option<u64> = None;
        let mut rest = residual;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let res_nbrs = self.open[v] & residual;
            if (res_nbrs.count_ones() as isize) <= self.k {
                continue;
            }
            let mut cand = self.closed[v];
            if self.k >= 0 {
                let mut it = res_nbrs;
                while it != 0 {
                    let u = it.trailing_zeros() as usize;
                    it &= it - 1;
                    cand |= self.closed[u];
                }
            }
            if best.is_none_or(|b| cand.count_ones() < b.count_ones()) {
                best = Some(cand);
            }
        }
        best
    }

    fn dfs(&self, chosen: u64, dominated: u64, budget: usize, explored: &mut u64) -> Option<u64> {
        *explored += 1;
        let Some(cand) = self.branch_candidates(dominated) else {
            return Some(chosen);
        };
        if budget == 0 {
            return None;
        }
        let mut it = cand & !chosen;
        while it != 0 {
            let c = it.trailing_zeros() as usize;
            it &= it - 1;
            if let Some(found) = self.dfs(chosen | 1 << c, dominated | self.closed[c], budget - 1, explored) {
                return Some(found);
            }
        }
        None
    }
}
