//! Generators for fans, the extremal families and uniformly random mops.
//!
//! The extremal families are unions of blocks (fans, joined fan pairs,
//! eared fans, triangles). Each block exposes two attachment vertices
//! `a_i, b_i` joined by one of its boundary edges. Blocks are laid around
//! the boundary cycle in index order, and the attachment polygon
//! `a_1 b_1 a_2 b_2 ... a_t b_t` is triangulated as a fan from `a_1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mop::Mop;
use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Fan,
    A,
    H,
    T,
    R,
    S,
    M,
    Random,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Fan => "fan",
            FamilyKind::A => "A",
            FamilyKind::H => "H",
            FamilyKind::T => "T",
            FamilyKind::R => "R",
            FamilyKind::S => "S",
            FamilyKind::M => "M",
            FamilyKind::Random => "random",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "fan" | "f" => FamilyKind::Fan,
            "a" => FamilyKind::A,
            "h" => FamilyKind::H,
            "t" => FamilyKind::T,
            "r" => FamilyKind::R,
            "s" => FamilyKind::S,
            "m" => FamilyKind::M,
            "random" => FamilyKind::Random,
            other => return Err(Error::BadParams(format!("unknown family '{other}'"))),
        })
    }
}

/// A family member with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Fan { n: usize },
    A { k: usize, p: usize },
    H { k: usize, t: usize },
    T { k: usize, t: usize },
    R { k: usize },
    S { k: usize, t: usize },
    M { p: usize },
    Random { n: usize, seed: u64 },
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Fan { .. } => FamilyKind::Fan,
            FamilySpec::A { .. } => FamilyKind::A,
            FamilySpec::H { .. } => FamilyKind::H,
            FamilySpec::T { .. } => FamilyKind::T,
            FamilySpec::R { .. } => FamilyKind::R,
            FamilySpec::S { .. } => FamilyKind::S,
            FamilySpec::M { .. } => FamilyKind::M,
            FamilySpec::Random { .. } => FamilyKind::Random,
        }
    }

    pub fn generate(&self) -> Result<Mop> {
        match *self {
            FamilySpec::Fan { n } => fan(n),
            FamilySpec::A { k, p } => family_a(k, p),
            FamilySpec::H { k, t } => family_h(k, t),
            FamilySpec::T { k, t } => family_t(k, t),
            FamilySpec::R { k } => family_r(k),
            FamilySpec::S { k, t } => family_s(k, t),
            FamilySpec::M { p } => family_m(p),
            FamilySpec::Random { n, seed } => random_mop(n, seed),
        }
    }

    /// Order given by the family's closed form.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Fan { n } | FamilySpec::Random { n, .. } => n,
            FamilySpec::A { k, p } => 2 * (k + 4) * p * (k + 5),
            FamilySpec::H { k, t } => (2 * k + 10) * t,
            FamilySpec::T { k, t } => (k + 4) * t,
            FamilySpec::R { k } => 2 * k + 3,
            FamilySpec::S { k, t } => (2 * k + 3) * t,
            FamilySpec::M { p } => 3 * p,
        }
    }

    /// Closed-form count of degree-2 vertices, where one is known.
    pub fn n2(&self) -> Option<usize> {
        match *self {
            FamilySpec::Fan { n } => Some(if n == 3 { 3 } else { 2 }),
            FamilySpec::A { k, p } if k >= 1 => Some(3 * p * (k + 5)),
            FamilySpec::H { t, .. } => Some(t),
            FamilySpec::T { t, .. } if t >= 2 => Some(t),
            FamilySpec::R { k } => Some(k + 1),
            FamilySpec::S { k, t } => Some((k + 1) * t),
            FamilySpec::M { p } => Some(p),
            _ => None,
        }
    }

    /// Known exact value for the family: `ι_k` for the isolation families
    /// at their own `k`, `γ` for `M_p`.
    pub fn known_value(&self) -> Option<usize> {
        match *self {
            FamilySpec::A { k, p } if k >= 1 => Some(2 * p * (k + 5)),
            FamilySpec::H { t, .. } => Some(2 * t),
            FamilySpec::T { t, .. } => Some(t),
            FamilySpec::R { .. } => Some(1),
            FamilySpec::S { t, .. } => Some(t),
            FamilySpec::M { p } => Some(p),
            _ => None,
        }
    }

    /// The `k` a family is built for, if any.
    pub fn k(&self) -> Option<usize> {
        match *self {
            FamilySpec::A { k, .. }
            | FamilySpec::H { k, .. }
            | FamilySpec::T { k, .. }
            | FamilySpec::R { k }
            | FamilySpec::S { k, .. } => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Fan { n } => write!(f, "fan(n={n})"),
            FamilySpec::A { k, p } => write!(f, "A(k={k},p={p})"),
            FamilySpec::H { k, t } => write!(f, "H(k={k},t={t})"),
            FamilySpec::T { k, t } => write!(f, "T(k={k},t={t})"),
            FamilySpec::R { k } => write!(f, "R(k={k})"),
            FamilySpec::S { k, t } => write!(f, "S(k={k},t={t})"),
            FamilySpec::M { p } => write!(f, "M(p={p})"),
            FamilySpec::Random { n, seed } => write!(f, "random(n={n},seed={seed})"),
        }
    }
}

/// Builds a mop from its boundary cycle (as arbitrary vertex ids) and an
/// edge list over the same ids.
pub fn mop_from_cycle(cycle: &[usize], edges: &[(usize, usize)]) -> Result<Mop> {
    let n = cycle.len();
    let pos: HashMap<usize, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut diags = Vec::new();
    for &(u, v) in edges {
        let (a, b) = match (pos.get(&u), pos.get(&v)) {
            (Some(&a), Some(&b)) => (a.min(b), a.max(b)),
            _ => return Err(Error::BadParams(format!("edge ({u},{v}) leaves the cycle"))),
        };
        if b - a >= 2 && !(a == 0 && b == n - 1) {
            diags.push((a, b));
        }
    }
    diags.sort_unstable();
    diags.dedup();
    Mop::new(n, diags)
}

#[derive(Default)]
struct Builder {
    next: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    fn vertices(&mut self, count: usize) -> Vec<usize> {
        (0..count).map(|_| self.vertex()).collect()
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Fan with the given center and rim path.
    fn fan(&mut self, center: usize, rim: &[usize]) {
        for (i, &r) in rim.iter().enumerate() {
            self.edge(center, r);
            if i + 1 < rim.len() {
                self.edge(r, rim[i + 1]);
            }
        }
    }

    /// `F_m` attached on the rim edge `x_p x_{p+1}` (rim `x_1..x_{m-1}`);
    /// returns the walk from `x_{p+1}` around to `x_p`.
    fn fan_block(&mut self, m: usize, p: usize) -> Vec<usize> {
        let center = self.vertex();
        let rim = self.vertices(m - 1);
        self.fan(center, &rim);
        let mut walk: Vec<usize> = rim[p..].to_vec();
        walk.push(center);
        walk.extend_from_slice(&rim[..p]);
        walk
    }

    /// Joins block walks into one mop.
    fn glue(mut self, walks: Vec<Vec<usize>>) -> Result<Mop> {
        let attach: Vec<usize> = walks.iter().flat_map(|w| [w[0], *w.last().expect("nonempty")]).collect();
        if walks.len() >= 2 {
            let a1 = attach[0];
            for &w in &attach[2..attach.len() - 1] {
                self.edge(a1, w);
            }
        }
        let cycle: Vec<usize> = walks.into_iter().flatten().collect();
        mop_from_cycle(&cycle, &self.edges)
    }
}

fn bad(msg: String) -> Error {
    Error::BadParams(msg)
}

/// `F_n`: center 0, diagonals `{0, i}` for `i` in `2..=n-2`.
pub fn fan(n: usize) -> Result<Mop> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    Mop::new(n, (2..n - 1).map(|i| (0, i)))
}

/// `T_{k,t}`: `t` copies of `F_{k+4}` joined on `x^i_1, x^i_2`.
pub fn family_t(k: usize, t: usize) -> Result<Mop> {
    if t < 1 {
        return Err(bad(format!("T needs t >= 1, got t = {t}")));
    }
    let mut b = Builder::default();
    let walks = (0..t).map(|_| b.fan_block(k + 4, 1)).collect();
    b.glue(walks)
}

/// `A_{k,p}`: with `t = p(k+5)`, `t` copies of `F_{k+4}` joined on
/// `x^i_1, x^i_2` and `t` more joined on `x^i_2, x^i_3`.
pub fn family_a(k: usize, p: usize) -> Result<Mop> {
    if p < 1 {
        return Err(bad(format!("A needs p >= 1, got p = {p}")));
    }
    let t = p * (k + 5);
    let mut b = Builder::default();
    let mut walks: Vec<Vec<usize>> = (0..t).map(|_| b.fan_block(k + 4, 1)).collect();
    walks.extend((0..t).map(|_| b.fan_block(k + 4, 2)));
    b.glue(walks)
}

/// `H_{k,t}` for `ceil((k+4)/2) <= t < k+5`: `t` blocks, each an `F_{k+6}`
/// and an `F_{k+4}` joined by `x_{k+4}y_1, x_{k+5}y_2, x_{k+4}y_2`.
pub fn family_h(k: usize, t: usize) -> Result<Mop> {
    let lo = (k + 4).div_ceil(2);
    if t < lo || t >= k + 5 {
        return Err(bad(format!("H needs {lo} <= t < {}, got t = {t}", k + 5)));
    }
    let mut b = Builder::default();
    let mut walks = Vec::with_capacity(t);
    for _ in 0..t {
        let x0 = b.vertex();
        let x = b.vertices(k + 5); // x[i] = x_{i+1}
        let y0 = b.vertex();
        let y = b.vertices(k + 3); // y[i] = y_{i+1}
        b.fan(x0, &x);
        b.fan(y0, &y);
        let (xk4, xk5) = (x[k + 3], x[k + 4]);
        b.edge(xk4, y[0]);
        b.edge(xk5, y[1]);
        b.edge(xk4, y[1]);
        // x_2 .. x_{k+4}, y_1, y_0, y_{k+3} .. y_2, x_{k+5}, x_0, x_1
        let mut walk: Vec<usize> = x[1..=k + 3].to_vec();
        walk.push(y[0]);
        walk.push(y0);
        walk.extend(y[1..].iter().rev());
        walk.push(xk5);
        walk.push(x0);
        walk.push(x[0]);
        walks.push(walk);
    }
    b.glue(walks)
}

/// One `R_{2k+3}` block: `F_{k+2}` with an ear on every boundary edge but
/// `uv`. Returns the walk from `v` around to `u`.
fn r_block(b: &mut Builder, k: usize) -> Vec<usize> {
    let x = b.vertex();
    let rim = b.vertices(k + 1);
    b.fan(x, &rim);
    // Boundary cycle of the fan: x, r_1, ..., r_{k+1}.
    let cycle: Vec<usize> = std::iter::once(x).chain(rim.iter().copied()).collect();
    // uv = r_2 r_3 (both of degree 3) when it exists, else r_1 r_2.
    let q = if k >= 3 { 2 } else { 1 };
    let m = cycle.len();
    let mut walk = Vec::with_capacity(2 * k + 3);
    // Start at v = r_{q+1} (cycle index q+1) and go forward to u = r_q.
    for step in 0..m {
        let i = (q + 1 + step) % m;
        let cur = cycle[i];
        walk.push(cur);
        if step + 1 < m {
            let nxt = cycle[(i + 1) % m];
            let ear = b.vertex();
            b.edge(ear, cur);
            b.edge(ear, nxt);
            walk.push(ear);
        }
    }
    walk
}

/// `R_{2k+3}`, a `(2k+3)`-vertex mop with `k + 1` vertices of degree 2.
pub fn family_r(k: usize) -> Result<Mop> {
    family_s(k, 1)
}

/// `S_{k,t}`: `t` copies of `R_{2k+3}` joined on `u_i, v_i`.
pub fn family_s(k: usize, t: usize) -> Result<Mop> {
    if k < 1 || t < 1 {
        return Err(bad(format!("S/R need k >= 1 and t >= 1, got k = {k}, t = {t}")));
    }
    let mut b = Builder::default();
    let walks = (0..t).map(|_| r_block(&mut b, k)).collect();
    b.glue(walks)
}

/// `M_p`: `p` triangles joined on `x_{i,1}, x_{i,2}`.
pub fn family_m(p: usize) -> Result<Mop> {
    if p < 2 {
        return Err(bad(format!("M needs p >= 2, got p = {p}")));
    }
    let mut b = Builder::default();
    let mut walks = Vec::with_capacity(p);
    for _ in 0..p {
        let v = b.vertices(3);
        b.edge(v[0], v[1]);
        b.edge(v[1], v[2]);
        b.edge(v[0], v[2]);
        walks.push(vec![v[0], v[2], v[1]]);
    }
    b.glue(walks)
}

/// Uniformly random triangulation of the `n`-gon.
///
/// Shuffles `n-2` up-steps and `n-1` down-steps with [`SplitMix64`],
/// rotates to the unique Dyck-plus-final-down form (cycle lemma), and maps
/// the Dyck word `U A D B` to the triangle on `(lo, hi)` with apex
/// `lo + 1 + |A|/2`, recursing into `A` on `lo..apex` and `B` on `apex..hi`.
pub fn random_mop(n: usize, seed: u64) -> Result<Mop> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let m = n - 2;
    let mut rng = SplitMix64::new(seed);
    let mut steps: Vec<i8> = std::iter::repeat_n(1, m).chain(std::iter::repeat_n(-1, m + 1)).collect();
    rng.shuffle(&mut steps);
    let (mut sum, mut min, mut argmin) = (0i64, i64::MAX, 0);
    for (i, &s) in steps.iter().enumerate() {
        sum += s as i64;
        if sum < min {
            min = sum;
            argmin = i;
        }
    }
    steps.rotate_left(argmin + 1);
    let word = &steps[..2 * m];

    // Matching down-step for each up-step.
    let mut matching = vec![0usize; word.len()];
    let mut open = Vec::new();
    for (i, &s) in word.iter().enumerate() {
        if s > 0 {
            open.push(i);
        } else {
            let j = open.pop().expect("Dyck word");
            matching[j] = i;
        }
    }

    let mut diags = Vec::with_capacity(n - 3);
    // (word start, word end exclusive, lo, hi)
    let mut stack = vec![(0usize, word.len(), 0usize, n - 1)];
    while let Some((s, e, lo, hi)) = stack.pop() {
        if s == e {
            continue;
        }
        let close = matching[s];
        let a_len = close - s - 1;
        let apex = lo + 1 + a_len / 2;
        for (u, v) in [(lo, apex), (apex, hi)] {
            if v - u >= 2 && !(u == 0 && v == n - 1) {
                diags.push((u, v));
            }
        }
        stack.push((s + 1, close, lo, apex));
        stack.push((close + 1, e, apex, hi));
    }
    Mop::new(n, diags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn fan_shapes() {
        assert_eq!(fan(3).unwrap(), Mop::triangle());
        assert_eq!(fan(6).unwrap().diagonals(), &[(0, 2), (0, 3), (0, 4)]);
        assert_eq!(fan(2), Err(Error::TooSmall { n: 2, min: 3 }));
    }

    #[test]
    fn parameter_ranges() {
        assert!(family_t(2, 0).is_err());
        assert!(family_a(2, 0).is_err());
        assert!(family_h(2, 2).is_err());
        assert!(family_h(2, 7).is_err());
        assert!(family_h(2, 3).is_ok());
        assert!(family_h(2, 6).is_ok());
        assert!(family_r(0).is_err());
        assert!(family_m(1).is_err());
    }

    #[test]
    fn single_blocks() {
        let t = family_t(2, 1).unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(t.max_degree(), 5);
        assert_eq!(family_s(2, 1).unwrap(), family_r(2).unwrap());
    }

    #[test]
    fn random_small_orders() {
        assert_eq!(random_mop(3, 99).unwrap(), Mop::triangle());
        let mut seen = HashMap::new();
        for seed in 0..2000 {
            *seen.entry(random_mop(5, seed).unwrap()).or_insert(0) += 1;
        }
        assert_eq!(seen.len(), 5);
        assert_eq!(random_mop(1, 0), Err(Error::TooSmall { n: 1, min: 3 }));
    }

    #[test]
    fn random_is_seed_deterministic() {
        assert_eq!(random_mop(30, 5).unwrap(), random_mop(30, 5).unwrap());
        assert_ne!(random_mop(30, 5).unwrap(), random_mop(30, 6).unwrap());
    }
}
