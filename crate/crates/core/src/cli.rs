//! Command-line front end. Exit codes: 0 success, 1 a checked inequality
//! failed, 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::generators::{gen, GenKind, GenSpec};
use crate::io::{instance_to_json, read_instance};
use crate::order::PSD_TOL;
use crate::theorems::{
    check_case, open_question_scan, registry, run_suite, ScanReport, SuiteConfig, SuiteReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "BLOCKTRACE_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "blocktrace",
    version,
    about = "Check partial-trace and partial-transpose inequalities for block matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run registry cases over seeded random instances.
    Verify {
        /// Comma-separated case ids, or `all`.
        #[arg(long, default_value = "all")]
        cases: String,
        /// Block structures, e.g. `2x2,2x3` or `2..4x2..4`.
        #[arg(long, default_value = "2x2")]
        dims: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = PSD_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one case on an instance read from a JSON file.
    Case {
        #[arg(long)]
        id: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = PSD_TOL)]
        tol: f64,
    },
    /// Generate a seeded instance as JSON.
    Gen {
        #[arg(long)]
        kind: GenKind,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        int_bound: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Statistics of the minimum eigenvalue of the Ando residual.
    Scan {
        #[arg(long, default_value = "2x2")]
        dims: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = PSD_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the registry.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidSpec(format!("bad dimension `{t}`")))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(Error::InvalidSpec(format!("bad dimension range `{s}`")));
    }
    Ok((lo, hi))
}

/// Parses `MxN` items separated by commas; either side may be an inclusive
/// range `a..b`, which expands to the Cartesian product.
pub fn parse_dims(spec: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (ms, ns) = item.split_once(['x', 'X']).ok_or_else(|| {
            Error::InvalidSpec(format!("dimension `{item}` is not of the form MxN"))
        })?;
        let (m0, m1) = parse_range(ms)?;
        let (n0, n1) = parse_range(ns)?;
        for m in m0..=m1 {
            for n in n0..=n1 {
                if !out.contains(&(m, n)) {
                    out.push((m, n));
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidSpec("no dimensions given".into()));
    }
    Ok(out)
}

fn parse_cases(spec: &str) -> Result<Vec<String>> {
    if spec.trim() == "all" {
        return Ok(Vec::new());
    }
    let ids: Vec<String> = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect();
    if ids.is_empty() {
        return Err(Error::InvalidSpec("no case ids given".into()));
    }
    if let Some(bad) = ids.iter().find(|id| crate::theorems::lookup(id).is_none()) {
        return Err(Error::UnknownCase(bad.clone()));
    }
    Ok(ids)
}

fn fmt_opt_f64(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:+.6e}"))
}

fn fmt_opt_u64(x: Option<u64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// One line per case: `id trials failures worst_witness worst_seed`.
pub fn suite_text(report: &SuiteReport) -> String {
    let mut s = String::new();
    for c in &report.cases {
        s += &format!(
            "{:<32} {:>7} {:>7} {:>14} {:>20}\n",
            c.id,
            c.trials,
            c.failures,
            fmt_opt_f64(c.worst_witness),
            fmt_opt_u64(c.worst_seed)
        );
    }
    s
}

fn scan_text(report: &ScanReport) -> String {
    let mut s = String::new();
    for d in &report.dims {
        s += &format!(
            "{}x{} trials {} min_lambda_min {} argmin_seed {} min_normalized {} violations {} below_zero {} histogram {:?}\n",
            d.m,
            d.n,
            d.trials,
            fmt_opt_f64(d.min_lambda_min),
            fmt_opt_u64(d.argmin_seed),
            fmt_opt_f64(d.min_normalized),
            d.violations,
            d.below_zero,
            d.histogram
        );
    }
    s
}

fn to_json_line<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, body: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(())
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NoConvergence { .. } => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Verify {
            cases,
            dims,
            trials,
            seed,
            tol,
            format,
            out: path,
        } => {
            let config = SuiteConfig {
                cases: parse_cases(&cases)?,
                dims: parse_dims(&dims)?,
                trials,
                seed,
                tol,
            };
            let report = run_suite(&config)?;
            let body = match format {
                Format::Json => to_json_line(&report)?,
                Format::Text => suite_text(&report),
            };
            emit(out, path.as_ref(), &body)?;
            Ok(if report.all_hold() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Case { id, input, tol } => {
            let inst = read_instance(&input)?;
            let report = check_case(&id, &inst, tol)?;
            out.write_all(to_json_line(&report)?.as_bytes())?;
            Ok(if report.holds { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Gen {
            kind,
            m,
            n,
            seed,
            rank,
            int_bound,
            out: path,
        } => {
            let mut spec = GenSpec::new(kind, m, n, seed);
            if let Some(r) = rank {
                spec = spec.with_rank(r);
            }
            if let Some(b) = int_bound {
                spec = spec.with_int_bound(b);
            }
            let inst = gen(&spec)?;
            emit(out, path.as_ref(), &(instance_to_json(&inst) + "\n"))?;
            Ok(EXIT_OK)
        }
        Command::Scan {
            dims,
            trials,
            seed,
            tol,
            format,
        } => {
            let report = open_question_scan(&parse_dims(&dims)?, trials, seed, tol)?;
            let body = match format {
                Format::Json => to_json_line(&report)?,
                Format::Text => scan_text(&report),
            };
            out.write_all(body.as_bytes())?;
            Ok(if report.violations == 0 {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::List { format } => {
            let body = match format {
                Format::Json => to_json_line(&registry())?,
                Format::Text => registry()
                    .iter()
                    .map(|c| {
                        format!(
                            "{:>2} {:<32} {:<24} {:<26} {}  [{}]\n",
                            c.number,
                            c.id,
                            c.input_class.as_str(),
                            serde_json::to_value(c.check_kind)
                                .ok()
                                .and_then(|v| v.as_str().map(String::from))
                                .unwrap_or_default(),
                            c.statement,
                            c.attribution
                        )
                    })
                    .collect(),
            };
            out.write_all(body.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

/// Sizes the global worker pool from `BLOCKTRACE_THREADS` when set.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            Error::InvalidSpec(format!(
                "{THREADS_ENV} must be a positive integer, got `{value}`"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::InvalidSpec(format!("cannot size thread pool: {e}")))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}
