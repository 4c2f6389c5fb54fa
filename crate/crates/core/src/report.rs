//! Per-run reports and the batch harness behind `mopguard bench`.
//!
//! CSV columns, in order: `instance_id, n, n2, k, algorithm, size, bound,
//! bound_respected, oracle, elapsed`. `bound` is the floor of the certified
//! bound, `oracle` the exact value (or the family's known value) when
//! available, and `elapsed` (microseconds) is only filled when timing is
//! requested so that default output is byte-for-byte reproducible. Rows are
//! sorted by instance id; a final `#` line carries the aggregate maximum of
//! `size / bound`.

use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::families::{random_mop, FamilyKind, FamilySpec};
use crate::isolation::{
    dominate_half_minus, dominate_third, isolate_best, isolate_order, isolate_order_minus_n2, isolate_order_plus_n2,
    BoundedSolution,
};
use crate::mop::Mop;
use crate::oracle::Oracle;
use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Order,
    Plus,
    Minus,
    Best,
    Third,
    Half,
}

impl Algorithm {
    pub const ISOLATION: [Algorithm; 4] = [Algorithm::Order, Algorithm::Plus, Algorithm::Minus, Algorithm::Best];
    pub const DOMINATION: [Algorithm; 2] = [Algorithm::Third, Algorithm::Half];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Order => "order",
            Algorithm::Plus => "plus",
            Algorithm::Minus => "minus",
            Algorithm::Best => "best",
            Algorithm::Third => "third",
            Algorithm::Half => "half",
        }
    }

    pub fn is_domination(self) -> bool {
        matches!(self, Algorithm::Third | Algorithm::Half)
    }

    /// Runs the algorithm; `k` is ignored for domination.
    pub fn run(self, g: &Mop, k: usize) -> Result<BoundedSolution> {
        match self {
            Algorithm::Order => isolate_order(g, k),
            Algorithm::Plus => isolate_order_plus_n2(g, k),
            Algorithm::Minus => isolate_order_minus_n2(g, k),
            Algorithm::Best => isolate_best(g, k),
            Algorithm::Third => dominate_third(g),
            Algorithm::Half => dominate_half_minus(g),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "order" => Algorithm::Order,
            "plus" => Algorithm::Plus,
            "minus" => Algorithm::Minus,
            "best" => Algorithm::Best,
            "third" => Algorithm::Third,
            "half" | "domhalf" => Algorithm::Half,
            other => return Err(Error::BadParams(format!("unknown algorithm '{other}'"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub instance_id: String,
    pub n: usize,
    pub n2: usize,
    /// `None` for domination runs.
    pub k: Option<usize>,
    pub algorithm: String,
    pub size: usize,
    pub bound: Option<Ratio<u64>>,
    pub bound_respected: bool,
    pub oracle: Option<usize>,
    pub elapsed: Option<Duration>,
}

impl RunReport {
    pub fn from_solution(instance_id: impl Into<String>, g: &Mop, algorithm: Algorithm, sol: &BoundedSolution) -> Self {
        Self {
            instance_id: instance_id.into(),
            n: g.n(),
            n2: g.n2(),
            k: sol.k,
            algorithm: algorithm.name().into(),
            size: sol.set.len(),
            bound: Some(sol.bound_value),
            bound_respected: !sol.bound_applies || sol.within_bound(),
            oracle: None,
            elapsed: None,
        }
    }

    pub fn bound_floor(&self) -> Option<u64> {
        self.bound.map(|b| b.to_integer())
    }

    /// `size / bound`, when the bound is positive.
    pub fn ratio(&self) -> Option<f64> {
        self.bound.filter(|b| *b.numer() > 0).map(|b| self.size as f64 * *b.denom() as f64 / *b.numer() as f64)
    }

    fn csv_record(&self) -> [String; 10] {
        let opt = |v: Option<String>| v.unwrap_or_default();
        [
            self.instance_id.clone(),
            self.n.to_string(),
            self.n2.to_string(),
            opt(self.k.map(|k| k.to_string())),
            self.algorithm.clone(),
            self.size.to_string(),
            opt(self.bound_floor().map(|b| b.to_string())),
            self.bound_respected.to_string(),
            opt(self.oracle.map(|o| o.to_string())),
            opt(self.elapsed.map(|d| d.as_micros().to_string())),
        ]
    }

    /// One-line JSON rendering.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "instance_id": self.instance_id,
            "n": self.n,
            "n2": self.n2,
            "k": self.k,
            "algorithm": self.algorithm,
            "size": self.size,
            "bound": self.bound_floor(),
            "bound_respected": self.bound_respected,
            "oracle": self.oracle,
            "elapsed_us": self.elapsed.map(|d| d.as_micros() as u64),
        })
        .to_string()
    }
}

pub const CSV_HEADER: [&str; 10] =
    ["instance_id", "n", "n2", "k", "algorithm", "size", "bound", "bound_respected", "oracle", "elapsed"];

/// Writes the reports (sorted by instance id, then `k`, then algorithm)
/// followed by the aggregate line.
pub fn write_csv<W: Write>(reports: &[RunReport], out: W) -> Result<()> {
    let mut sorted: Vec<&RunReport> = reports.iter().collect();
    sorted.sort_by(|a, b| (&a.instance_id, a.k, &a.algorithm).cmp(&(&b.instance_id, b.k, &b.algorithm)));
    let io_err = |e: &dyn fmt::Display| Error::BadParams(format!("write failed: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(|e| io_err(&e))?;
    for r in &sorted {
        w.write_record(r.csv_record()).map_err(|e| io_err(&e))?;
    }
    w.flush().map_err(|e| io_err(&e))?;
    let mut out = w.into_inner().map_err(|e| io_err(&e))?;
    let max_ratio =
        sorted.iter().filter_map(|r| r.ratio()).fold(None, |m: Option<f64>, r| Some(m.map_or(r, |m| m.max(r))));
    let violations = sorted.iter().filter(|r| !r.bound_respected).count();
    let ratio = max_ratio.map_or_else(|| "-".to_string(), |r| format!("{r:.4}"));
    writeln!(out, "# rows={} violations={} max_size_over_bound={}", sorted.len(), violations, ratio)
        .map_err(|e| io_err(&e))?;
    Ok(())
}

/// What `bench` runs: random mops over `n x k x trials`, plus the named
/// families at small parameters.
#[derive(Clone, Debug)]
pub struct BenchSpec {
    pub families: Vec<FamilyKind>,
    pub n: RangeInclusive<usize>,
    pub k: RangeInclusive<usize>,
    /// Block counts for the named families (`p` for `A` and `M`).
    pub t: RangeInclusive<usize>,
    pub trials: usize,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    /// Exact values are computed for instances up to this order.
    pub oracle_limit: Option<usize>,
    pub timing: bool,
}

impl Default for BenchSpec {
    fn default() -> Self {
        Self {
            families: vec![FamilyKind::Random],
            n: 8..=20,
            k: 0..=3,
            t: 1..=2,
            trials: 10,
            seed: 0,
            algorithms: Algorithm::ISOLATION.to_vec(),
            oracle_limit: None,
            timing: false,
        }
    }
}

/// Seed of trial `trial` at order `n`, independent of iteration order.
pub fn instance_seed(seed: u64, n: usize, trial: usize) -> u64 {
    SplitMix64::new(seed ^ ((n as u64) << 40) ^ trial as u64).next_u64()
}

/// Instances of the spec, each with an id and the `k` values to run.
fn instances(spec: &BenchSpec) -> Result<Vec<(String, Mop, Option<FamilySpec>)>> {
    let mut out = Vec::new();
    for &kind in &spec.families {
        let mut specs = Vec::new();
        match kind {
            FamilyKind::Random => {
                for n in spec.n.clone() {
                    for trial in 0..spec.trials {
                        let seed = instance_seed(spec.seed, n, trial);
                        out.push((format!("random-n{n:04}-s{trial:05}"), random_mop(n, seed)?, None));
                    }
                }
            }
            FamilyKind::Fan => specs.extend(spec.n.clone().filter(|&n| n >= 3).map(|n| FamilySpec::Fan { n })),
            FamilyKind::M => specs.extend(spec.t.clone().filter(|&p| p >= 2).map(|p| FamilySpec::M { p })),
            _ => {
                for k in spec.k.clone() {
                    for t in spec.t.clone() {
                        let fs = match kind {
                            FamilyKind::T => FamilySpec::T { k, t },
                            FamilyKind::A => FamilySpec::A { k, p: t },
                            FamilyKind::S => FamilySpec::S { k, t },
                            FamilyKind::R => FamilySpec::R { k },
                            // H takes t in [ceil((k+4)/2), k+4]; offset the range into it.
                            FamilyKind::H => FamilySpec::H { k, t: (k + 4).div_ceil(2) + t - 1 },
                            _ => unreachable!(),
                        };
                        if !specs.contains(&fs) {
                            specs.push(fs);
                        }
                    }
                }
            }
        }
        for fs in specs {
            if let Ok(g) = fs.generate() {
                out.push((fs.to_string(), g, Some(fs)));
            }
        }
    }
    Ok(out)
}

/// Runs the benchmark. Inapplicable (instance, k, algorithm) combinations
/// are skipped; rows come back unsorted.
pub fn run_bench(spec: &BenchSpec) -> Result<Vec<RunReport>> {
    if spec.n.is_empty() && spec.families.contains(&FamilyKind::Random) && spec.trials > 0 {
        return Ok(Vec::new());
    }
    let oracle = spec.oracle_limit.map(Oracle::with_limit).transpose()?;
    let mut reports = Vec::new();
    for (id, g, family) in instances(spec)? {
        let ks: Vec<Option<usize>> = match family.and_then(|f| f.k()) {
            Some(k) => vec![Some(k)],
            None if matches!(family, Some(FamilySpec::M { .. })) => vec![None],
            None => spec.k.clone().map(Some).collect(),
        };
        let mut dom_done = false;
        for k in ks {
            for &alg in &spec.algorithms {
                if alg.is_domination() && dom_done {
                    continue;
                }
                if !alg.is_domination() && k.is_none() {
                    continue;
                }
                let kk = k.unwrap_or(0);
                let start = Instant::now();
                let sol = match alg.run(&g, kk) {
                    Ok(sol) => sol,
                    Err(Error::Verification(msg)) => return Err(Error::Verification(format!("{id}: {msg}"))),
                    Err(_) => continue,
                };
                let elapsed = start.elapsed();
                let mut r = RunReport::from_solution(id.clone(), &g, alg, &sol);
                r.elapsed = spec.timing.then_some(elapsed);
                r.oracle = match family {
                    Some(f) if alg.is_domination() == matches!(f, FamilySpec::M { .. }) => f.known_value(),
                    _ => None,
                };
                if r.oracle.is_none() {
                    if let Some(o) = &oracle {
                        if g.n() <= o.limit() {
                            let exact =
                                if alg.is_domination() { o.domination_number(&g) } else { o.isolation_number(&g, kk) };
                            r.oracle = Some(exact?.value);
                        }
                    }
                }
                reports.push(r);
            }
            dom_done = true;
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_is_sorted_and_deterministic() {
        let spec = BenchSpec { n: 8..=11, k: 0..=1, trials: 3, seed: 7, ..BenchSpec::default() };
        let a = run_bench(&spec).unwrap();
        let b = run_bench(&spec).unwrap();
        let (mut x, mut y) = (Vec::new(), Vec::new());
        write_csv(&a, &mut x).unwrap();
        write_csv(&b, &mut y).unwrap();
        assert_eq!(x, y);
        let text = String::from_utf8(x).unwrap();
        assert!(text.starts_with("instance_id,n,n2,k,algorithm,size,bound,bound_respected,oracle,elapsed\n"));
        assert!(text.lines().last().unwrap().starts_with("# rows="));
        assert!(a.iter().all(|r| r.bound_respected));
    }

    #[test]
    fn empty_range() {
        #[allow(clippy::reversed_empty_ranges)]
        let spec = BenchSpec { n: 10..=9, ..BenchSpec::default() };
        assert!(run_bench(&spec).unwrap().is_empty());
    }

    #[test]
    fn family_rows_carry_known_values() {
        let spec = BenchSpec {
            families: vec![FamilyKind::T, FamilyKind::M],
            k: 2..=2,
            t: 2..=3,
            algorithms: vec![Algorithm::Best, Algorithm::Half],
            ..BenchSpec::default()
        };
        let rows = run_bench(&spec).unwrap();
        let known: Vec<_> = rows.iter().filter(|r| r.oracle.is_some()).collect();
        assert_eq!(known.len(), 4);
        for r in known {
            assert_eq!(Some(r.size), r.oracle, "{r:?}");
        }
        assert_eq!(rows.len(), 6);
    }
}
