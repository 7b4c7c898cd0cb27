//! The `divzeta` command line.
//!
//! Flags may also come from a `key=value` file given by `--config`; a flag on the
//! command line wins over the same key in the file. The cache directory is taken from
//! `--cache-dir`, then `DIVZETA_CACHE_DIR`, then a directory under the system temp dir.
//!
//! Exit codes: 0 success, 1 acceptance failures in `verify-all`, 2 usage or argument
//! errors, 3 accuracy, resource and I/O errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::divisor::{DeltaStarForm, DivisorTable};
use crate::error::{Error, Result};
use crate::error_terms::HybridErrorTerms;
use crate::explicit::{
    default_voronoi_cut, integral_delta_voronoi, integral_e_atkinson, r_series, truncated_voronoi_delta_star,
};
use crate::expsum::{kolesnik_comparator, kolesnik_sum, lemma4_bound, lemma4_sum, PhasePolynomial};
use crate::grid::CriticalLineGrid;
use crate::moments::{fit_log_cubic, log_spaced, MomentFit, MomentKind, UniformSamples};
use crate::output::{json_document, svg_line_chart, write_atomic, CsvTable, Provenance};
use crate::pairs::{best_word, decimal, kolesnik_exponent_check, ExponentPair};
use crate::quadruples::{count_quadruples_fast, count_quadruples_naive};
use crate::verify::{verify_all, Sources, VerifyConfig};

pub const CACHE_ENV: &str = "DIVZETA_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "divzeta",
    version,
    about = "Divisor-problem and critical-line error terms",
    arg_required_else_help = true
)]
struct Cli {
    /// key=value file supplying defaults for any flag
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Directory for sieve and grid caches
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sieve d(n) and write the table (binary cache, or CSV)
    #[command(args_override_self = true)]
    Sieve(SieveArgs),
    /// Integrate |zeta(1/2+it)|^2 and write the grid
    #[command(args_override_self = true)]
    ZetaGrid(ZetaGridArgs),
    /// Sample E, 2pi Delta*(T/2pi), E* and R
    #[command(args_override_self = true)]
    Rterm(RtermArgs),
    /// Evaluate an explicit formula against its exact counterpart
    #[command(args_override_self = true)]
    Explicit(ExplicitArgs),
    /// Alternating divisor exponential sums against their bounds
    #[command(args_override_self = true)]
    Expsum(ExpsumArgs),
    /// Moment integrals of E* or R with a cubic-in-log fit
    #[command(args_override_self = true)]
    Moments(MomentsArgs),
    /// Count near-coincident quadruples of k-th roots
    #[command(args_override_self = true)]
    Quadruples(QuadruplesArgs),
    /// Exponent-pair arithmetic
    #[command(args_override_self = true)]
    Pairs(PairsArgs),
    /// Run the acceptance suite and print the report
    #[command(args_override_self = true)]
    VerifyAll(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Bin,
    Csv,
}

#[derive(Args, Debug)]
struct SieveArgs {
    #[arg(long)]
    nmax: usize,
    /// Output path, `-` for standard output
    #[arg(long)]
    out: PathBuf,
    /// Default: csv for `-`, bin otherwise
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct ZetaGridArgs {
    #[arg(long)]
    tmax: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct RtermArgs {
    #[arg(long)]
    tmax: f64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Sieve size (default: the smallest that covers 4T/2pi)
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, default_value = "-")]
    out: PathBuf,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Formula {
    Atkinson,
    Voronoi,
    Truncated,
    Rseries,
}

#[derive(Args, Debug)]
struct ExplicitArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    /// One or more T (or x for `truncated`), comma separated
    #[arg(long = "T", value_delimiter = ',', required = true)]
    t: Vec<f64>,
    /// Voronoi truncation (default min(T^2, 1e7))
    #[arg(long)]
    ncut: Option<u64>,
    /// Terms of the truncated Voronoi series
    #[arg(long = "N", default_value_t = 10_000)]
    n: u64,
    /// Cut of the first Atkinson sum (default T)
    #[arg(long)]
    first_cut: Option<f64>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SumKind {
    Lemma4,
    Kolesnik,
}

#[derive(Args, Debug)]
struct ExpsumArgs {
    #[arg(long, value_enum)]
    kind: SumKind,
    #[arg(long = "T")]
    t: f64,
    /// One or more K, comma separated; each row sums over K < k <= 2K (K <= k <= 2K for kolesnik)
    #[arg(long = "K", value_delimiter = ',', required = true)]
    k: Vec<u64>,
    /// Append K, 2K, 4K, ... up to this many doublings of the last K
    #[arg(long, default_value_t = 0)]
    doublings: u32,
    /// Phase coefficients c1,c3,... (default c1 = sqrt(8 pi))
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Vec<f64>,
    /// Exponent pair in the lemma4 comparator
    #[arg(long, default_value = "1/9,13/18")]
    pair: String,
    /// kolesnik: coefficient of (kT)^(1/2) (default sqrt(8 pi))
    #[arg(long, allow_hyphen_values = true)]
    c: Option<f64>,
    /// kolesnik: coefficient of k^(3/2) T^(-1/2)
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    d: f64,
    #[arg(long, default_value = "-")]
    out: PathBuf,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MomentArg {
    #[value(name = "R")]
    R,
    #[value(name = "EStar")]
    EStar,
}

#[derive(Args, Debug)]
struct MomentsArgs {
    #[arg(long, value_enum)]
    kind: MomentArg,
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, default_value_t = 1e2)]
    tmin: f64,
    #[arg(long, default_value_t = 1e4)]
    tmax: f64,
    #[arg(long, default_value_t = 64)]
    samples: usize,
    /// Trapezoid step (checked against its half)
    #[arg(long, default_value_t = 0.05)]
    step: f64,
    /// Main-term exponent (default 2 for R^2, 4/3 for E*^2, 3 for R^4)
    #[arg(long)]
    alpha: Option<f64>,
    /// Residual scaling exponent (default 11/6 for R^2, 7/6 for E*^2, alpha otherwise)
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Naive,
    Fast,
}

#[derive(Args, Debug)]
struct QuadruplesArgs {
    #[arg(long = "N")]
    n: u64,
    #[arg(long, default_value_t = 2)]
    k: u32,
    #[arg(long)]
    delta: f64,
    #[arg(long, value_enum, default_value_t = Method::Fast)]
    method: Method,
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct PairsArgs {
    /// Word over {A, B}, applied innermost (rightmost) first
    #[arg(long, default_value = "")]
    word: String,
    #[arg(long, default_value = "0,1")]
    base: String,
    /// Also report the word of length <= LEN minimising the R-bound exponent
    #[arg(long, value_name = "LEN")]
    best: Option<usize>,
    /// Also print the 593/912 and 11/18 exponent arithmetic
    #[arg(long)]
    kolesnik: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 10_000_000)]
    nmax: usize,
    #[arg(long, default_value_t = 1e4)]
    tmax: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 0.05)]
    step: f64,
    #[arg(long, default_value_t = VerifyConfig::default().seed)]
    seed: u64,
    /// Also write the report here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the report as JSON
    #[arg(long)]
    json: Option<PathBuf>,
}

const SUBCOMMANDS: [&str; 9] = [
    "sieve",
    "zeta-grid",
    "rterm",
    "explicit",
    "expsum",
    "moments",
    "quadruples",
    "pairs",
    "verify-all",
];

/// Parses a `key=value` file into `--key value` arguments. Blank lines and `#` comments
/// are skipped; `key=true` becomes a bare `--key` and `key=false` is dropped.
pub fn config_args(text: &str) -> std::result::Result<Vec<String>, String> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key=value, got {raw:?}", i + 1))?;
        let (k, v) = (k.trim().trim_start_matches("--"), v.trim());
        if k.is_empty() {
            return Err(format!("config line {}: empty key", i + 1));
        }
        if k == "config" {
            return Err(format!("config line {}: nested config files are not supported", i + 1));
        }
        match v {
            "true" => out.push(format!("--{k}")),
            "false" => {}
            _ => {
                out.push(format!("--{k}"));
                out.push(v.to_string());
            }
        }
    }
    Ok(out)
}

fn config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Splices config-file arguments in right after the subcommand so that later command-line
/// flags override them.
fn with_config(args: Vec<OsString>) -> std::result::Result<Vec<OsString>, String> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(&path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let extra = config_args(&text)?;
    let pos = args
        .iter()
        .position(|a| SUBCOMMANDS.contains(&a.to_string_lossy().as_ref()))
        .ok_or_else(|| "a subcommand is required".to_string())?;
    let mut out = args[..=pos].to_vec();
    out.extend(extra.into_iter().map(OsString::from));
    out.extend(args[pos + 1..].iter().cloned());
    Ok(out)
}

/// Runs the tool with process stdio and returns the exit status.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the tool writing to the given sinks.
pub fn run_with<I: IntoIterator<Item = OsString>>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args: Vec<OsString> = args.into_iter().collect();
    let args = match with_config(args) {
        Ok(a) => a,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: thread pool: {e}");
            return 3;
        }
    };
    let cache = cache_dir(cli.cache_dir.clone());
    // the worker pool needs `Send` sinks, so output is buffered and flushed afterwards
    let (mut buf_out, mut buf_err) = (Vec::new(), Vec::new());
    let result = pool.install(|| dispatch(&cli.command, &cache, &mut buf_out, &mut buf_err));
    let _ = out.write_all(&buf_out);
    let _ = err.write_all(&buf_err);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// 2 for bad parameters, 3 for everything that failed while computing.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Argument(_) | Error::OutOfRange { .. } => 2,
        Error::Accuracy { .. } | Error::Resource(_) | Error::Conditioning(_) | Error::Cache(_) | Error::Io(_) => 3,
    }
}

fn cache_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
        .unwrap_or_else(|| std::env::temp_dir().join("divzeta-cache"))
}

fn load_table(cache: &Path, n_max: usize) -> Result<DivisorTable> {
    DivisorTable::load_or_build(&cache.join(format!("divisors-{n_max}.bin")), n_max)
}

fn load_grid(cache: &Path, t_max: f64, tol: f64) -> Result<CriticalLineGrid> {
    CriticalLineGrid::load_or_build(&cache.join(format!("grid-{t_max}-{tol:e}.bin")), t_max, tol)
}

/// Smallest sieve serving `Δ*(t/2π)` up to `t`.
fn n_max_for(t: f64) -> usize {
    ((4.0 * t / (2.0 * PI)).ceil() as usize).max(1)
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::Argument(format!("--{name} must be positive and finite, got {v}")))
    }
}

macro_rules! config {
    ($($k:literal => $v:expr),* $(,)?) => {{
        let mut m = BTreeMap::new();
        $( m.insert($k.to_string(), $v.to_string()); )*
        m
    }};
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn dispatch(cmd: &Command, cache: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Sieve(a) => sieve(a, out),
        Command::ZetaGrid(a) => zeta_grid(a, out),
        Command::Rterm(a) => rterm(a, cache, out),
        Command::Explicit(a) => explicit(a, cache, out),
        Command::Expsum(a) => expsum(a, cache, out),
        Command::Moments(a) => moments(a, cache, out),
        Command::Quadruples(a) => quadruples(a, out),
        Command::Pairs(a) => pairs(a, out),
        Command::VerifyAll(a) => verify(a, cache, out, err),
    }
}

fn format_for(out: &Path, f: Option<Format>) -> Format {
    f.unwrap_or(if out.as_os_str() == "-" { Format::Csv } else { Format::Bin })
}

fn sieve(a: &SieveArgs, out: &mut dyn Write) -> Result<i32> {
    let table = DivisorTable::build(a.nmax)?;
    match format_for(&a.out, a.format) {
        Format::Bin => {
            if a.out.as_os_str() == "-" {
                return Err(Error::Argument("binary output needs a file path".into()));
            }
            table.write_cache(&a.out)?;
        }
        Format::Csv => {
            let prov = Provenance::new("sieve", config! {"nmax" => a.nmax});
            let mut csv = CsvTable::new(&["n", "d", "prefix_d", "prefix_alt", "prefix_d2"]);
            for n in 1..=a.nmax {
                csv.push(vec![
                    n.to_string(),
                    table.d(n).to_string(),
                    table.prefix_d(n).to_string(),
                    table.prefix_alt(n).to_string(),
                    table.prefix_d2(n).to_string(),
                ]);
            }
            write_atomic(&a.out, csv.render(&prov).as_bytes(), out)?;
        }
    }
    Ok(0)
}

fn zeta_grid(a: &ZetaGridArgs, out: &mut dyn Write) -> Result<i32> {
    let grid = CriticalLineGrid::build(a.tmax, a.tol)?;
    match format_for(&a.out, a.format) {
        Format::Bin => {
            if a.out.as_os_str() == "-" {
                return Err(Error::Argument("binary output needs a file path".into()));
            }
            grid.write_cache(&a.out)?;
        }
        Format::Csv => {
            let prov = Provenance::new("zeta-grid", config! {"tmax" => a.tmax, "tol" => a.tol});
            let mut csv = CsvTable::new(&["t", "zeta_sq", "m0", "m1", "E"]);
            for n in grid.nodes() {
                csv.push_f64(&[n.t, n.value, n.m0, n.m1, grid.e(n.t)?]);
            }
            write_atomic(&a.out, csv.render(&prov).as_bytes(), out)?;
        }
    }
    Ok(0)
}

fn rterm(a: &RtermArgs, cache: &Path, out: &mut dyn Write) -> Result<i32> {
    positive("tmax", a.tmax)?;
    if a.samples == 0 {
        return Err(Error::Argument("--samples must be positive".into()));
    }
    let n_max = a.nmax.unwrap_or_else(|| n_max_for(a.tmax));
    if n_max < n_max_for(a.tmax) {
        return Err(Error::Argument(format!(
            "--nmax {n_max} is below 4T/2pi = {} needed for T = {}",
            n_max_for(a.tmax),
            a.tmax
        )));
    }
    let table = load_table(cache, n_max)?;
    let grid = load_grid(cache, a.tmax, a.tol)?;
    let terms = HybridErrorTerms::new(&grid, &table);
    let prov = Provenance::new(
        "rterm",
        config! {"tmax" => a.tmax, "samples" => a.samples, "tol" => a.tol, "nmax" => n_max},
    );
    let mut csv = CsvTable::new(&["T", "E", "scaled_delta_star", "E_star", "R"]);
    for i in 1..=a.samples {
        let t = a.tmax * i as f64 / a.samples as f64;
        let e = terms.e(t)?;
        let d = terms.scaled_delta_star(t)?;
        csv.push_f64(&[t, e, d, e - d, terms.r_term(t)?]);
    }
    write_atomic(&a.out, csv.render(&prov).as_bytes(), out)?;
    if let Some(svg) = &a.svg {
        let ts = csv.column("T");
        let pts = |c: &str| ts.iter().copied().zip(csv.column(c)).collect::<Vec<_>>();
        let chart = svg_line_chart("E*(T) and R(T)", "T", &[("E*", pts("E_star")), ("R", pts("R"))]);
        write_atomic(svg, chart.as_bytes(), out)?;
    }
    Ok(0)
}

fn explicit(a: &ExplicitArgs, cache: &Path, out: &mut dyn Write) -> Result<i32> {
    for &t in &a.t {
        positive("T", t)?;
    }
    let t_top = a.t.iter().copied().fold(0.0, f64::max);
    let mut cfg = config! {"formula" => format!("{:?}", a.formula).to_lowercase(), "T" => join(&a.t)};
    let mut csv = CsvTable::new(&["T", "value", "comparator", "discrepancy", "scale", "scaled_discrepancy", "terms"]);
    match a.formula {
        Formula::Atkinson => {
            cfg.insert("tol".into(), a.tol.to_string());
            if let Some(c) = a.first_cut {
                cfg.insert("first_cut".into(), c.to_string());
            }
            let cut = a.first_cut.unwrap_or(t_top).max(t_top);
            let table = load_table(cache, cut.ceil() as usize)?;
            let grid = load_grid(cache, t_top, a.tol)?;
            for &t in &a.t {
                let v = integral_e_atkinson(t, &table, a.first_cut)?;
                let exact = grid.integral_e(t)?;
                let terms = a.first_cut.unwrap_or(t).floor();
                push_row(&mut csv, t, v, exact, t.powf(0.25), terms);
            }
        }
        Formula::Voronoi => {
            if let Some(c) = a.ncut {
                cfg.insert("ncut".into(), c.to_string());
            }
            let cuts: Vec<u64> = a.t.iter().map(|&t| a.ncut.unwrap_or_else(|| default_voronoi_cut(t))).collect();
            let need = cuts.iter().copied().max().unwrap_or(1) as usize;
            let table = load_table(cache, need.max((4.0 * t_top).ceil() as usize))?;
            for (&t, &cut) in a.t.iter().zip(&cuts) {
                let v = integral_delta_voronoi(t, &table, cut)?;
                let exact = table.integral_delta_star(t)?;
                push_row(&mut csv, t, v.value, exact, t.powf(0.25), cut as f64);
            }
        }
        Formula::Truncated => {
            cfg.insert("N".into(), a.n.to_string());
            let table = load_table(cache, (a.n as usize).max((4.0 * t_top).ceil() as usize))?;
            for &x in &a.t {
                let v = truncated_voronoi_delta_star(x, a.n, &table)?;
                let exact = table.delta_star(x, DeltaStarForm::Alternating)?;
                push_row(&mut csv, x, v.value, exact, (x / a.n as f64).sqrt(), a.n as f64);
            }
        }
        Formula::Rseries => {
            cfg.insert("tol".into(), a.tol.to_string());
            let table = load_table(cache, n_max_for(t_top).max(t_top.ceil() as usize))?;
            let grid = load_grid(cache, t_top, a.tol)?;
            let terms = HybridErrorTerms::new(&grid, &table);
            for &t in &a.t {
                let v = r_series(t, &table)?;
                let exact = terms.r_term(t)?;
                push_row(&mut csv, t, v, exact, t.sqrt() * t.ln(), t.floor());
            }
        }
    }
    let prov = Provenance::new("explicit", cfg);
    write_atomic(&a.out, csv.render(&prov).as_bytes(), out)?;
    Ok(0)
}

fn push_row(csv: &mut CsvTable, t: f64, value: f64, comparator: f64, scale: f64, terms: f64) {
    let d = value - comparator;
    csv.push_f64(&[t, value, comparator, d, scale, d.abs() / scale, terms]);
}

fn expsum(a: &ExpsumArgs, cache: &Path, out: &mut dyn Write) -> Result<i32> {
    positive("T", a.t)?;
    let mut ks = a.k.clone();
    if let Some(&last) = ks.last() {
        for j in 1..=a.doublings {
            ks.push(last.checked_shl(j).ok_or_else(|| Error::Argument("too many doublings".into()))?);
        }
    }
    if ks.contains(&0) {
        return Err(Error::Argument("--K must be positive".into()));
    }
    let top = ks.iter().copied().max().unwrap_or(1) * 2;
    let table = load_table(cache, top as usize)?;
    let c1 = (8.0 * PI).sqrt();
    let mut cfg = config! {"kind" => format!("{:?}", a.kind).to_lowercase(), "T" => a.t, "K" => join(&ks)};
    let mut csv = CsvTable::new(&["K", "K2", "re", "im", "modulus", "comparator", "ratio", "flagged"]);
    match a.kind {
        SumKind::Lemma4 => {
            let coeffs = if a.coeffs.is_empty() { vec![c1] } else { a.coeffs.clone() };
            let phase = PhasePolynomial::new(coeffs.clone())?;
            let pair = ExponentPair::parse(&a.pair)?;
            let (kappa, lambda) = (to_f64(&pair.kappa), to_f64(&pair.lambda));
            cfg.insert("coeffs".into(), join(&coeffs));
            cfg.insert("pair".into(), format!("{},{}", pair.kappa, pair.lambda));
            for &k in &ks {
                let s = lemma4_sum(a.t, k, 2 * k, &phase, &table)?;
                expsum_row(&mut csv, k, 2 * k, s.value, lemma4_bound(a.t, k, kappa, lambda), s.flagged);
            }
        }
        SumKind::Kolesnik => {
            let c = a.c.unwrap_or(c1);
            cfg.insert("c".into(), c.to_string());
            cfg.insert("d".into(), a.d.to_string());
            for &k in &ks {
                let s = kolesnik_sum(a.t, k, 2 * k, c, a.d, &table)?;
                expsum_row(&mut csv, k, 2 * k, s.value, kolesnik_comparator(a.t, k), s.flagged);
            }
        }
    }
    let prov = Provenance::new("expsum", cfg);
    write_atomic(&a.out, csv.render(&prov).as_bytes(), out)?;
    if let Some(svg) = &a.svg {
        let ks = csv.column("K");
        let pts = |c: &str| ks.iter().copied().zip(csv.column(c)).collect::<Vec<_>>();
        let chart = svg_line_chart("|sum| and comparator", "K", &[("|sum|", pts("modulus")), ("comparator", pts("comparator"))]);
        write_atomic(svg, chart.as_bytes(), out)?;
    }
    Ok(0)
}

fn to_f64(r: &num_rational::BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn expsum_row(csv: &mut CsvTable, k: u64, k2: u64, v: num_complex::Complex64, comparator: f64, flagged: bool) {
    let m = v.norm();
    csv.push(vec![
        k.to_string(),
        k2.to_string(),
        v.re.to_string(),
        v.im.to_string(),
        m.to_string(),
        comparator.to_string(),
        (m / comparator).to_string(),
        flagged.to_string(),
    ]);
}

#[derive(Serialize)]
struct MomentsOutput {
    kind: &'static str,
    p: u32,
    step: f64,
    #[serde(flatten)]
    fit: MomentFit,
}

fn moments(a: &MomentsArgs, cache: &Path, out: &mut dyn Write) -> Result<i32> {
    positive("tmin", a.tmin)?;
    positive("tmax", a.tmax)?;
    positive("step", a.step)?;
    let kind = match a.kind {
        MomentArg::R => MomentKind::R,
        MomentArg::EStar => MomentKind::EStar,
    };
    let alpha = match (a.alpha, kind, a.p) {
        (Some(v), _, _) => v,
        (None, MomentKind::R, 2) => 2.0,
        (None, MomentKind::EStar, 2) => 4.0 / 3.0,
        (None, MomentKind::R, 4) => 3.0,
        (None, _, p) => return Err(Error::Argument(format!("no default --alpha for {kind:?} with p = {p}"))),
    };
    let beta = a.beta.unwrap_or(match (kind, a.p) {
        (MomentKind::R, 2) => 11.0 / 6.0,
        (MomentKind::EStar, 2) => 7.0 / 6.0,
        _ => alpha,
    });
    let n_max = a.nmax.unwrap_or_else(|| n_max_for(a.tmax));
    let table = load_table(cache, n_max)?;
    let grid = load_grid(cache, a.tmax, a.tol)?;
    let terms = HybridErrorTerms::new(&grid, &table);
    let samples = UniformSamples::sample(kind, a.tmax, a.step, &terms)?;
    let points = log_spaced(a.tmin, a.tmax, a.samples)
        .into_iter()
        .map(|t| Ok((t, samples.moment(a.p, t)?.value)))
        .collect::<Result<Vec<_>>>()?;
    let fit = fit_log_cubic(&points, alpha, beta)?;
    let kind_name = match kind {
        MomentKind::R => "R",
        MomentKind::EStar => "EStar",
    };
    let prov = Provenance::new(
        "moments",
        config! {
            "kind" => kind_name, "p" => a.p, "tmin" => a.tmin, "tmax" => a.tmax, "samples" => a.samples,
            "step" => a.step, "alpha" => alpha, "beta" => beta, "tol" => a.tol, "nmax" => n_max,
        },
    );
    let doc = MomentsOutput {
        kind: kind_name,
        p: a.p,
        step: a.step,
        fit,
    };
    write_atomic(&a.out, json_document(&prov, &doc)?.as_bytes(), out)?;
    Ok(0)
}

fn quadruples(a: &QuadruplesArgs, out: &mut dyn Write) -> Result<i32> {
    let r = match a.method {
        Method::Naive => count_quadruples_naive(a.n, a.k, a.delta)?,
        Method::Fast => count_quadruples_fast(a.n, a.k, a.delta)?,
    };
    let prov = Provenance::new(
        "quadruples",
        config! {"N" => a.n, "k" => a.k, "delta" => a.delta, "method" => format!("{:?}", a.method).to_lowercase()},
    );
    write_atomic(&a.out, json_document(&prov, &r)?.as_bytes(), out)?;
    Ok(0)
}

fn pairs(a: &PairsArgs, out: &mut dyn Write) -> Result<i32> {
    let base = ExponentPair::parse(&a.base)?;
    let p = ExponentPair::from_word(&a.word, &base)?;
    let bound = p.r_bound_exponent();
    writeln!(out, "{} {}", p.kappa, p.lambda)?;
    writeln!(out, "pair {p}")?;
    writeln!(out, "r_bound_exponent {bound} = {}", decimal(&bound, 10))?;
    writeln!(out, "satisfies_3k_plus_l_le_1 {}", p.satisfies_35())?;
    let tail = p.tail_exponent();
    writeln!(out, "tail_exponent {tail} = {}", decimal(&tail, 10))?;
    if let Some(len) = a.best {
        let b = best_word(&base, len);
        let e = b.r_bound_exponent();
        writeln!(out, "best_word_up_to_{len} {b} r_bound_exponent {e} = {}", decimal(&e, 10))?;
    }
    if a.kolesnik {
        let k = kolesnik_exponent_check();
        writeln!(out, "kolesnik_first_branch {}", k.first_branch)?;
        writeln!(out, "kolesnik_second_branch {}", k.second_branch)?;
        writeln!(out, "kolesnik_exponent {} = {} equals_593_912 {}", k.maximum, k.maximum_decimal, k.equals_593_912)?;
        writeln!(out, "aba_tail_exponent {} = {}", k.aba_tail, k.aba_tail_decimal)?;
    }
    Ok(0)
}

fn verify(a: &VerifyArgs, cache: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    positive("tmax", a.tmax)?;
    positive("tol", a.tol)?;
    positive("step", a.step)?;
    let cfg = VerifyConfig {
        n_max: a.nmax,
        t_max: a.tmax,
        tol: a.tol,
        moment_step: a.step,
        seed: a.seed,
    };
    let table = load_table(cache, cfg.n_max)?;
    let grid = load_grid(cache, cfg.t_max, cfg.tol)?;
    let report = verify_all(&Sources { table: &table, grid: &grid }, &cfg)?;
    let text = report.render();
    out.write_all(text.as_bytes())?;
    if let Some(path) = &a.out {
        write_atomic(path, text.as_bytes(), out)?;
    }
    if let Some(path) = &a.json {
        let prov = Provenance::new(
            "verify-all",
            config! {"nmax" => cfg.n_max, "tmax" => cfg.t_max, "tol" => cfg.tol, "step" => cfg.moment_step, "seed" => cfg.seed},
        );
        write_atomic(path, json_document(&prov, &report)?.as_bytes(), out)?;
    }
    if report.all_pass() {
        Ok(0)
    } else {
        let failed: Vec<String> = report.criteria.iter().filter(|c| !c.pass).map(|c| c.id.to_string()).collect();
        let _ = writeln!(err, "acceptance criteria failed: {}", failed.join(", "));
        Ok(1)
    }
}
