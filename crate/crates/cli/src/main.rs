//! `mopguard`: generate mops and polygons, compute and verify isolating and
//! dominating sets, place relaxed guards, and run batch benchmarks.
//!
//! Exit codes: 0 ok, 1 property false, 2 input error, 3 internal
//! verification failure.

use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mopguard::families::FamilySpec;
use mopguard::gallery::{
    place_guards, render_mop_svg, render_polygon_svg, spiral_gallery, triangulate, verify_window_coverage,
};
use mopguard::io::{
    parse_mop, parse_polygon, parse_vertex_set, write_mop1, write_mop_json, write_poly1, write_poly_json,
};
use mopguard::report::{run_bench, write_csv, Algorithm, BenchSpec};
use mopguard::{Error, FamilyKind, Mop, Oracle, RunReport, VertexSet};

#[derive(Parser)]
#[command(
    name = "mopguard",
    version,
    about = "Isolating sets of maximal outerplanar graphs and relaxed polygon guards"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member (MOP1) or a spiral gallery (POLY1).
    Gen(GenArgs),
    /// Compute an isolating or dominating set and verify it.
    Isolate(IsolateArgs),
    /// Check whether a vertex set isolates (or dominates) a mop.
    Verify(VerifyArgs),
    /// Exact isolation or domination number by exhaustive search.
    Oracle(OracleArgs),
    /// Place relaxed guards on a spiral gallery or a polygon file.
    Gallery(GalleryArgs),
    /// Run algorithms over random mops and families; writes CSV.
    Bench(BenchArgs),
    /// Render a mop or a polygon as SVG.
    Svg(SvgArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Mop1,
    Json,
}

#[derive(Args)]
struct GenArgs {
    /// fan, T, A, H, R, S, M, random or spiral.
    #[arg(long)]
    family: String,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    t: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "mop1")]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoAlgo {
    Order,
    Plus,
    Minus,
    Best,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum DomAlgo {
    Third,
    #[value(alias = "domhalf")]
    Half,
    Exact,
}

#[derive(Args)]
struct IsolateArgs {
    /// MOP1 or JSON file, `-` for standard input.
    file: PathBuf,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, value_enum, default_value = "best")]
    algo: IsoAlgo,
    /// Compute a dominating set instead; overrides `--algo`.
    #[arg(long, value_enum)]
    dominate: Option<DomAlgo>,
    /// Print the recursion trace.
    #[arg(long)]
    trace: bool,
    /// Oracle size limit for `exact`.
    #[arg(long, default_value_t = mopguard::oracle::DEFAULT_LIMIT)]
    limit: usize,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Vertex set file: indices separated by whitespace or commas.
    set: PathBuf,
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Check domination instead of isolation.
    #[arg(long)]
    dominate: bool,
}

#[derive(Args)]
struct OracleArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long)]
    dominate: bool,
    #[arg(long, default_value_t = mopguard::oracle::DEFAULT_LIMIT)]
    limit: usize,
}

#[derive(Args)]
struct GalleryArgs {
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Guard this POLY1/JSON polygon instead of a spiral gallery.
    #[arg(long, conflicts_with = "t")]
    polygon: Option<PathBuf>,
    /// Also write an SVG drawing with the guards highlighted.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated families (random, fan, T, A, H, R, S, M).
    #[arg(long, default_value = "random")]
    families: String,
    /// Order range `lo..hi` (inclusive) or a single value.
    #[arg(long, default_value = "8..20")]
    n: String,
    #[arg(long, default_value = "0..3")]
    k: String,
    /// Block-count range for the named families.
    #[arg(long, default_value = "1..2")]
    t: String,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated algorithms (order, plus, minus, best, third, half).
    #[arg(long, default_value = "order,plus,minus,best")]
    algorithms: String,
    /// Fill the oracle column for instances up to this order.
    #[arg(long)]
    oracle_limit: Option<usize>,
    /// Record wall-clock time per run (makes output non-reproducible).
    #[arg(long)]
    timing: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SvgArgs {
    file: PathBuf,
    /// Treat the input as a polygon and draw its triangulation.
    #[arg(long)]
    polygon: bool,
    /// Vertex set file to highlight.
    #[arg(long)]
    set: Option<PathBuf>,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Verification(_)) { 3 } else { 2 };
        Self { code, message: e.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Isolate(a) => isolate(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(a) => oracle(a),
        Command::Gallery(a) => gallery(a),
        Command::Bench(a) => bench(a),
        Command::Svg(a) => svg(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_mop(path: &Path) -> Result<Mop, Failure> {
    parse_mop(&read_input(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_set(path: &Path) -> Result<VertexSet, Failure> {
    parse_vertex_set(&read_input(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::input(format!("stdout: {e}"))),
    }
}

/// A required non-negative parameter.
fn param(name: &str, value: Option<i64>, min: i64) -> Result<usize, Failure> {
    let v = value.ok_or_else(|| Failure::input(format!("BadParams: --{name} is required for this family")))?;
    if v < min {
        return Err(Failure::input(format!("BadParams: {name} must be >= {min}, got {v}")));
    }
    Ok(v as usize)
}

fn gen(a: GenArgs) -> Outcome {
    if a.family.eq_ignore_ascii_case("spiral") {
        let (t, k) = (param("t", a.t, 1)?, param("k", a.k, 0)?);
        let p = spiral_gallery(t, k)?;
        let text = match a.format {
            Format::Mop1 => write_poly1(&p),
            Format::Json => write_poly_json(&p) + "\n",
        };
        emit(a.out.as_deref(), &text)?;
        return Ok(0);
    }
    let kind: FamilyKind = a.family.parse()?;
    let spec = match kind {
        FamilyKind::Fan => FamilySpec::Fan { n: param("n", a.n, 3)? },
        FamilyKind::T => FamilySpec::T { k: param("k", a.k, 0)?, t: param("t", a.t, 1)? },
        FamilyKind::A => FamilySpec::A { k: param("k", a.k, 0)?, p: param("p", a.p.or(a.t), 1)? },
        FamilyKind::H => FamilySpec::H { k: param("k", a.k, 0)?, t: param("t", a.t, 1)? },
        FamilyKind::R => FamilySpec::R { k: param("k", a.k, 0)? },
        FamilyKind::S => FamilySpec::S { k: param("k", a.k, 0)?, t: param("t", a.t, 1)? },
        FamilyKind::M => FamilySpec::M { p: param("p", a.p.or(a.t), 2)? },
        FamilyKind::Random => FamilySpec::Random { n: param("n", a.n, 3)?, seed: a.seed },
    };
    let g = spec.generate()?;
    let text = match a.format {
        Format::Mop1 => format!("# {spec}\n{}", write_mop1(&g)),
        Format::Json => write_mop_json(&g) + "\n",
    };
    emit(a.out.as_deref(), &text)?;
    Ok(0)
}

/// Independent re-check of a computed set.
fn recheck(g: &Mop, set: &VertexSet, k: Option<usize>) -> Result<(), Failure> {
    let ok = match k {
        Some(k) => g.is_isolating(set, k)?.isolating,
        None => g.is_dominating(set)?,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(format!("set {set} failed re-verification")).into())
    }
}

fn isolate(a: IsolateArgs) -> Outcome {
    let g = read_mop(&a.file)?;
    let id = a.file.display().to_string();
    let algorithm = match (a.dominate, a.algo) {
        (Some(DomAlgo::Third), _) => Some(Algorithm::Third),
        (Some(DomAlgo::Half), _) => Some(Algorithm::Half),
        (Some(DomAlgo::Exact), _) | (None, IsoAlgo::Exact) => None,
        (None, IsoAlgo::Order) => Some(Algorithm::Order),
        (None, IsoAlgo::Plus) => Some(Algorithm::Plus),
        (None, IsoAlgo::Minus) => Some(Algorithm::Minus),
        (None, IsoAlgo::Best) => Some(Algorithm::Best),
    };
    let k = if a.dominate.is_some() { None } else { Some(a.k) };
    let report = match algorithm {
        Some(alg) => {
            let sol = alg.run(&g, a.k)?;
            recheck(&g, &sol.set, k)?;
            println!("set: {}", sol.set);
            println!("size: {}", sol.set.len());
            println!(
                "bound: {} ({}{})",
                sol.bound_floor(),
                sol.bound_kind,
                if sol.bound_applies { "" } else { ", not applicable" }
            );
            if a.trace {
                print!("{}", sol.trace_log());
            }
            RunReport::from_solution(id, &g, alg, &sol)
        }
        None => {
            let oracle = Oracle::with_limit(a.limit)?;
            let exact = match k {
                Some(k) => oracle.isolation_number(&g, k)?,
                None => oracle.domination_number(&g)?,
            };
            recheck(&g, &exact.witness, k)?;
            println!("set: {}", exact.witness);
            println!("size: {}", exact.value);
            println!("bound: none (exact)");
            RunReport {
                instance_id: id,
                n: g.n(),
                n2: g.n2(),
                k,
                algorithm: "exact".into(),
                size: exact.value,
                bound: None,
                bound_respected: true,
                oracle: Some(exact.value),
                elapsed: None,
            }
        }
    };
    println!("verified: {}", if report.bound_respected { "yes" } else { "yes, but the size exceeds the bound" });
    println!("{}", report.to_json());
    Ok(if report.bound_respected { 0 } else { 1 })
}

fn verify(a: VerifyArgs) -> Outcome {
    let g = read_mop(&a.file)?;
    let set = read_set(&a.set)?;
    set.check(g.n()).map_err(|e| Failure::input(e.to_string()))?;
    let residual = g.residual_max_degree(&set)?;
    println!("residual max degree: {residual}");
    let ok = if a.dominate {
        let ok = g.is_dominating(&set)?;
        println!("dominating: {ok}");
        ok
    } else {
        let ok = g.is_isolating(&set, a.k)?.isolating;
        println!("isolating (k = {}): {ok}", a.k);
        ok
    };
    Ok(if ok { 0 } else { 1 })
}

fn oracle(a: OracleArgs) -> Outcome {
    let g = read_mop(&a.file)?;
    let oracle = Oracle::with_limit(a.limit)?;
    let (name, exact) = if a.dominate {
        ("gamma".to_string(), oracle.domination_number(&g)?)
    } else {
        (format!("iota_{}", a.k), oracle.isolation_number(&g, a.k)?)
    };
    recheck(&g, &exact.witness, (!a.dominate).then_some(a.k))?;
    println!("{name} = {}", exact.value);
    println!("witness: {}", exact.witness);
    println!("explored: {}", exact.explored);
    Ok(0)
}

fn gallery(a: GalleryArgs) -> Outcome {
    let p = match (&a.polygon, a.t) {
        (Some(path), _) => {
            parse_polygon(&read_input(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
        }
        (None, Some(t)) => spiral_gallery(t, a.k)?,
        (None, None) => return Err(Failure::input("give either --t (spiral gallery) or --polygon FILE")),
    };
    let cert = place_guards(&p, a.k)?;
    let (covered, gap) = verify_window_coverage(&cert.triangulation, &cert.guards, a.k);
    if !covered {
        return Err(Error::Verification(format!("window starting at corner {} is uncovered", gap.unwrap_or(0))).into());
    }
    println!("corners: {}", p.len());
    println!("guards: {}", cert.guards);
    println!("count: {}", cert.guards.len());
    println!("augmentations: {}", cert.augmentations);
    println!("windows of {}: all covered", (a.k + 2).min(p.len()));
    if let Some(path) = &a.svg {
        emit(Some(path), &render_polygon_svg(&p, Some(&cert.triangulation), &cert.guards))?;
    }
    Ok(0)
}

/// `lo..hi` (inclusive), `lo..=hi`, or a single value. `lo > hi` is an empty range.
fn parse_range(name: &str, s: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad =
        || Failure::input(format!("BadParams: --{name} expects lo..hi or a single non-negative value, got '{s}'"));
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

fn list<T, E: std::fmt::Display>(s: &str, parse: impl Fn(&str) -> Result<T, E>) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| parse(x).map_err(|e| Failure::input(e.to_string())))
        .collect()
}

fn bench(a: BenchArgs) -> Outcome {
    let spec = BenchSpec {
        families: list(&a.families, str::parse::<FamilyKind>)?,
        n: parse_range("n", &a.n)?,
        k: parse_range("k", &a.k)?,
        t: parse_range("t", &a.t)?,
        trials: a.trials,
        seed: a.seed,
        algorithms: list(&a.algorithms, str::parse::<Algorithm>)?,
        oracle_limit: a.oracle_limit,
        timing: a.timing,
    };
    if spec.families.contains(&FamilyKind::Random) && !spec.n.is_empty() && *spec.n.start() < 3 {
        return Err(Failure::input(format!("BadParams: random mops need n >= 3, got {}", spec.n.start())));
    }
    let reports = run_bench(&spec)?;
    let mut buf = Vec::new();
    write_csv(&reports, &mut buf)?;
    emit(a.out.as_deref(), &String::from_utf8_lossy(&buf))?;
    let violations = reports.iter().filter(|r| !r.bound_respected).count();
    if violations > 0 {
        eprintln!("{violations} rows exceed their bound");
        return Ok(1);
    }
    Ok(0)
}

fn svg(a: SvgArgs) -> Outcome {
    let text = read_input(&a.file)?;
    let highlight = match &a.set {
        Some(path) => read_set(path)?,
        None => VertexSet::new(),
    };
    let doc = if a.polygon {
        let p = parse_polygon(&text).map_err(|e| Failure::input(format!("{}: {e}", a.file.display())))?;
        highlight.check(p.len()).map_err(|e| Failure::input(e.to_string()))?;
        let g = triangulate(&p)?;
        render_polygon_svg(&p, Some(&g), &highlight)
    } else {
        let g = parse_mop(&text).map_err(|e| Failure::input(format!("{}: {e}", a.file.display())))?;
        highlight.check(g.n()).map_err(|e| Failure::input(e.to_string()))?;
        render_mop_svg(&g, &highlight)
    };
    emit(a.out.as_deref(), &doc)?;
    Ok(0)
}
