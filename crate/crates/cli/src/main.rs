//! `spectral-ham`: certify Hamiltonicity from spectral and degree conditions,
//! build the extremal families, scan tightness thresholds and run the
//! verification suite.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use spectral_ham::certifier::{
    certify_chvatal, certify_cycle, certify_li_ning, certify_ore, certify_path, CertifierError, CertifyOptions, Mode,
    Theorem, Verdict,
};
use spectral_ham::graph::format::{parse_edge_list, parse_graph6_lines, write_edge_list, write_graph6};
use spectral_ham::graph::{build_extremal, ExtremalSpec, Family, Graph, Partition};
use spectral_ham::report::VerdictRecord;
use spectral_ham::spectral::default_tolerance;
use spectral_ham::suite::{CriterionOutcome, Suite, DEFAULT_SEED, RANDOM_GRAPHS};
use spectral_ham::tightness::{orbit_edge, scan_to_csv, threshold_scan, DeletionOrbit};

const THREADS_VAR: &str = "SPECTRAL_HAM_THREADS";

#[derive(Parser)]
#[command(name = "spectral-ham", version, about = "Spectral certificates for Hamiltonian cycles and paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify each input graph under the requested theorems.
    Analyze(AnalyzeArgs),
    /// Write an extremal family graph, optionally with one edge deleted.
    Construct(ConstructArgs),
    /// Tabulate the threshold regime of single-edge deletions as CSV.
    Scan(ScanArgs),
    /// Run the verification suite.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Cycle,
    Path,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Mtc,
    Mtp,
    LiNing,
    Ore,
    Chvatal,
    All,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// Input file: one graph6 string per line, or a single edge list.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Degree parameter; defaults to the minimum degree of each graph.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "all")]
    theorem: TheoremArg,
    /// Width of the certified spectral interval ("1e-12", "0.001" or "p/q").
    #[arg(long, value_parser = parse_tol)]
    tol: Option<BigRational>,
    /// One JSON object per line instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "N", alias = "n")]
    N,
    #[value(name = "split", alias = "SPLIT")]
    Split,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::L => Family::L,
            FamilyArg::M => Family::M,
            FamilyArg::N => Family::N,
            FamilyArg::Split => Family::Split,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrbitArg {
    Yy,
    Yz,
    Zz,
}

impl From<OrbitArg> for DeletionOrbit {
    fn from(o: OrbitArg) -> DeletionOrbit {
        match o {
            OrbitArg::Yy => DeletionOrbit::YY,
            OrbitArg::Yz => DeletionOrbit::YZ,
            OrbitArg::Zz => DeletionOrbit::ZZ,
        }
    }
}

#[derive(clap::Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Delete one edge between the named classes.
    #[arg(long, value_enum)]
    delete_edge: Option<OrbitArg>,
    #[arg(long, value_enum, default_value = "graph6")]
    out: Format,
    /// Graph destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Partition sidecar; defaults to `<output>.partition.json` when `--output` is given.
    #[arg(long)]
    partition: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanFamilyArg {
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "N", alias = "n")]
    N,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
}

#[derive(clap::Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    family: ScanFamilyArg,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    out: TableFormat,
    #[arg(long, value_parser = parse_tol)]
    tol: Option<BigRational>,
    /// Table destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Paper,
}

#[derive(clap::Args)]
struct ReproduceArgs {
    #[arg(long, value_enum, default_value = "paper")]
    suite: SuiteArg,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Size of the random soundness sweep.
    #[arg(long, default_value_t = RANDOM_GRAPHS)]
    random_graphs: usize,
}

/// Failure that maps to exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn parse_tol(s: &str) -> Result<BigRational, String> {
    let q = parse_decimal(s.trim()).ok_or_else(|| format!("`{s}` is not a decimal or p/q rational"))?;
    if q <= BigRational::from_integer(0.into()) {
        return Err("tolerance must be positive".into());
    }
    Ok(q)
}

/// Exact value of `p/q`, `123.45` or `1.5e-12`.
fn parse_decimal(s: &str) -> Option<BigRational> {
    if s.contains('/') {
        return BigRational::from_str(s).ok();
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.trim_start_matches(['-', '+']).is_empty() && frac.is_empty() {
        return None;
    }
    let digits = BigInt::from_str(&format!("{}{frac}", if whole.is_empty() { "0" } else { whole })).ok()?;
    let scale = exp - frac.len() as i32;
    let pow = BigInt::from(10).pow(scale.unsigned_abs());
    Some(if scale >= 0 {
        BigRational::from_integer(digits * pow)
    } else {
        BigRational::new(digits, pow)
    })
}

fn configure_threads() -> Result<(), InputError> {
    let Ok(raw) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| InputError(format!("{THREADS_VAR} must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Construct(a) => construct(a),
        Command::Scan(a) => scan(a),
        Command::Reproduce(a) => Ok(reproduce(a)),
    });
    match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_graphs(path: &Path, format: Format) -> Result<Vec<Graph>, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    match format {
        Format::Graph6 => parse_graph6_lines(&text)
            .map_err(|(line, e)| InputError(format!("{}: line {line}: {e}", path.display()))),
        Format::Edgelist => Ok(vec![parse_edge_list(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?]),
    }
}

fn requested(theorem: TheoremArg, mode: ModeArg) -> Vec<(TheoremArg, Mode)> {
    let modes: &[Mode] = match mode {
        ModeArg::Cycle => &[Mode::Cycle],
        ModeArg::Path => &[Mode::Path],
        ModeArg::Both => &[Mode::Cycle, Mode::Path],
    };
    let theorems = match theorem {
        TheoremArg::All => vec![TheoremArg::Mtc, TheoremArg::Mtp, TheoremArg::LiNing, TheoremArg::Ore, TheoremArg::Chvatal],
        t => vec![t],
    };
    let mut out = vec![];
    for t in theorems {
        for &m in modes {
            let fits = match t {
                TheoremArg::Mtc => m == Mode::Cycle,
                TheoremArg::Mtp => m == Mode::Path,
                _ => true,
            };
            if fits {
                out.push((t, m));
            }
        }
    }
    out
}

fn run_theorem(g: &Graph, t: TheoremArg, m: Mode, k: Option<usize>, opts: &CertifyOptions) -> Result<Verdict, CertifierError> {
    match t {
        TheoremArg::Mtc => certify_cycle(g, k, opts),
        TheoremArg::Mtp => certify_path(g, k, opts),
        TheoremArg::LiNing => certify_li_ning(g, k, m, opts),
        TheoremArg::Ore => Ok(certify_ore(g, m)),
        TheoremArg::Chvatal => Ok(certify_chvatal(g, m)),
        TheoremArg::All => unreachable!("expanded by `requested`"),
    }
}

fn theorem_name(t: TheoremArg, m: Mode) -> &'static str {
    match (t, m) {
        (TheoremArg::Mtc, _) => Theorem::Mtc.name(),
        (TheoremArg::Mtp, _) => Theorem::Mtp.name(),
        (TheoremArg::LiNing, Mode::Cycle) => Theorem::LiNingCycle.name(),
        (TheoremArg::LiNing, Mode::Path) => Theorem::LiNingPath.name(),
        (TheoremArg::Ore, Mode::Cycle) => Theorem::OreCycle.name(),
        (TheoremArg::Ore, Mode::Path) => Theorem::OrePath.name(),
        (TheoremArg::Chvatal, Mode::Cycle) => Theorem::ChvatalCycle.name(),
        (TheoremArg::Chvatal, Mode::Path) => Theorem::ChvatalPath.name(),
        (TheoremArg::All, _) => unreachable!("expanded by `requested`"),
    }
}

/// One analyze output line.
#[derive(Serialize)]
#[serde(untagged)]
enum Report {
    Verdict {
        graph: usize,
        #[serde(flatten)]
        record: VerdictRecord,
    },
    /// A theorem whose premises cannot even be stated for this graph (for
    /// example δ = 0 with an automatic k).
    Skipped { graph: usize, kind: &'static str, theorem: &'static str, n: usize, reason: String },
}

impl Report {
    fn is_decisive(&self) -> bool {
        match self {
            Report::Verdict { record, .. } => record.kind != "Inconclusive",
            Report::Skipped { .. } => false,
        }
    }

    fn text(&self) -> String {
        match self {
            Report::Skipped { graph, theorem, reason, .. } => {
                format!("graph {graph} {theorem}: Inconclusive ({reason})")
            }
            Report::Verdict { graph, record: r } => {
                let mut s = format!("graph {graph} {}: {}", r.theorem, r.kind);
                if let Some(f) = r.exceptional_family {
                    s += &format!("({f})");
                }
                s += &format!(" k={} n={}", r.k, r.n);
                if let (Some(lo), Some(hi)) = (r.lambda_lo_approx, r.lambda_hi_approx) {
                    s += &format!(" lambda in [{lo:.12}, {hi:.12}]");
                }
                if let Some(t) = r.threshold_approx {
                    s += &format!(" threshold {t:.12}");
                }
                if let Some(c) = &r.certificate {
                    s += &format!(" certificate {c:?}");
                }
                if let Some(reason) = &r.premises.reason {
                    s += &format!(" ({reason})");
                }
                s
            }
        }
    }
}

fn analyze(a: AnalyzeArgs) -> Result<ExitCode, InputError> {
    let graphs = read_graphs(&a.input, a.format)?;
    let jobs = requested(a.theorem, a.mode);
    if jobs.is_empty() {
        return Err(InputError("the chosen theorem does not apply in the chosen mode".into()));
    }
    if let Some(k) = a.k {
        for (i, g) in graphs.iter().enumerate() {
            if k > g.min_degree() {
                return Err(InputError(format!("graph {i}: k = {k} exceeds the minimum degree {}", g.min_degree())));
            }
        }
    }
    let opts = CertifyOptions { tol: a.tol.unwrap_or_else(default_tolerance) };
    let reports: Vec<Vec<Report>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            jobs.iter()
                .map(|&(t, m)| match run_theorem(g, t, m, a.k, &opts) {
                    Ok(v) => Ok(Report::Verdict { graph: i, record: VerdictRecord::from(&v) }),
                    Err(e @ CertifierError::Spectral(_)) => Err(InputError(format!("graph {i}: {e}"))),
                    Err(e) if a.k.is_some() => Err(InputError(format!("graph {i}: {e}"))),
                    Err(e) => Ok(Report::Skipped {
                        graph: i,
                        kind: "Inconclusive",
                        theorem: theorem_name(t, m),
                        n: g.order(),
                        reason: e.to_string(),
                    }),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut all_decisive = true;
    for r in reports.iter().flatten() {
        all_decisive &= r.is_decisive();
        if a.json {
            println!("{}", serde_json::to_string(r)?);
        } else {
            println!("{}", r.text());
        }
    }
    Ok(if all_decisive { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct Sidecar<'a> {
    family: Family,
    k: usize,
    n: usize,
    m: usize,
    partition: &'a Partition,
    deleted_edge: Option<(usize, usize)>,
}

fn construct(a: ConstructArgs) -> Result<ExitCode, InputError> {
    let spec = ExtremalSpec::new(a.family.into(), a.k, a.n)?;
    let (mut g, partition) = build_extremal(&spec)?;
    let deleted = match a.delete_edge {
        None => None,
        Some(o) => {
            let (u, v) = orbit_edge(&spec, o.into())
                .ok_or_else(|| InputError(format!("{spec} has no edge of the requested class pair")))?;
            g = g.without_edge(u, v)?;
            Some((u, v))
        }
    };
    let body = match a.out {
        Format::Graph6 => write_graph6(&g)? + "\n",
        Format::Edgelist => write_edge_list(&g),
    };
    let sidecar = Sidecar { family: spec.family, k: spec.k, n: spec.n, m: g.size(), partition: &partition, deleted_edge: deleted };
    let sidecar = serde_json::to_string_pretty(&sidecar)? + "\n";
    let sidecar_path = a.partition.clone().or_else(|| {
        a.output.as_ref().map(|p| {
            let mut s = p.clone().into_os_string();
            s.push(".partition.json");
            PathBuf::from(s)
        })
    });
    match &a.output {
        Some(p) => fs::write(p, body).map_err(|e| InputError(format!("{}: {e}", p.display())))?,
        None => print!("{body}"),
    }
    if let Some(p) = sidecar_path {
        fs::write(&p, sidecar).map_err(|e| InputError(format!("{}: {e}", p.display())))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn scan(a: ScanArgs) -> Result<ExitCode, InputError> {
    let TableFormat::Csv = a.out;
    let family = match a.family {
        ScanFamilyArg::M => Family::M,
        ScanFamilyArg::N => Family::N,
    };
    if a.k == 0 {
        return Err(InputError("scan requires k >= 1".into()));
    }
    let tol = a.tol.unwrap_or_else(default_tolerance);
    let summary = threshold_scan(family, a.k, a.n_min..=a.n_max, &tol)?;
    let table = scan_to_csv(&summary.rows)?;
    match &a.output {
        Some(p) => fs::write(p, &table).map_err(|e| InputError(format!("{}: {e}", p.display())))?,
        None => print!("{table}"),
    }
    let show = |x: Option<i64>| x.map_or_else(|| "none".to_string(), |v| v.to_string());
    eprintln!(
        "scan {family} k={}: last proposition row {}, theorem regime from {}, theorem bound {}, gap {}",
        a.k,
        show(summary.last_proposition.map(|n| n as i64)),
        show(summary.crossover.map(|n| n as i64)),
        summary.theorem_bound,
        show(summary.gap),
    );
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SuiteSummary<'a> {
    suite: &'static str,
    seed: u64,
    passed: usize,
    failed: usize,
    criteria: &'a [CriterionOutcome],
}

fn reproduce(a: ReproduceArgs) -> ExitCode {
    let SuiteArg::Paper = a.suite;
    let suite = Suite::new(a.seed).with_random_graphs(a.random_graphs);
    let outcomes = suite.run_all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let summary = SuiteSummary { suite: "paper", seed: a.seed, passed, failed: outcomes.len() - passed, criteria: &outcomes };
    println!("{}", serde_json::to_string(&summary).expect("summary serializes"));
    if passed == outcomes.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
