//! Command-line front end: `compute`, `table`, `verify`, `homotopy`.

use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cyclotomic::Cyclotomic;
use crate::error::Error;
use crate::invariant::{
    closed_form, homotopy_equivalent, state_sum, table, verify_closed_form, verify_corollary,
    verify_periodicity, verify_well_defined_sweep, LensSpace, TableRow,
};
use crate::report::Report;
use crate::representation::{verify_kernel_generators, verify_relations};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const FLOAT_DIGITS: usize = 10;
const DEFAULT_PMAX_SHORT: u32 = 48;
const DEFAULT_PMAX_LONG: u32 = 60;
const DEFAULT_TABLE_PMAX: u32 = 12;
const WELL_DEFINED_SHIFTS: [i64; 7] = [-3, -2, -1, 0, 1, 2, 3];

#[derive(Debug, Parser)]
#[command(name = "e6lens", version, about = "Exact E6 state sum invariants of lens spaces")]
pub struct Cli {
    /// Sweep bound on p (defaults: table 12, closedform/wellDefined 48, periodicity/corollary 60)
    #[arg(long, global = true)]
    pub pmax: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Working precision in bits for float output
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u32).range(64..))]
    pub precision: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Z(L(p,q)) by the state sum, with the closed form alongside
    #[command(allow_negative_numbers = true)]
    Compute { p: BigInt, q: BigInt },
    /// Tabulate Z(L(p,q)) for coprime 1 ≤ p ≤ pmax, 0 ≤ q < p
    Table,
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// Whether L(p,q) and L(p′,q′) are orientation-preservingly homotopy equivalent
    #[command(allow_negative_numbers = true)]
    Homotopy {
        p: BigInt,
        q: BigInt,
        p2: BigInt,
        q2: BigInt,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Relations,
    Kernel,
    #[value(name = "wellDefined")]
    WellDefined,
    Periodicity,
    Closedform,
    Corollary,
    All,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            code
        }
    }
}

/// Runs a parsed command; returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match &cli.command {
        Command::Compute { p, q } => compute(cli, p, q, out),
        Command::Table => print_table(cli, out),
        Command::Verify { target } => verify(cli, *target, out),
        Command::Homotopy { p, q, p2, q2 } => homotopy(cli, [p, q, p2, q2], out),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = std::result::Result<i32, CliError>;

/// `x` to `digits` significant digits, trailing zeros dropped.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    let s = if (-5..15).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{:.*e}", digits - 1, x)
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn float_parts(z: &Cyclotomic, precision: u32) -> (String, String) {
    let (re, im) = z.to_complex_float(precision).to_f64();
    (format_significant(re, FLOAT_DIGITS), format_significant(im, FLOAT_DIGITS))
}

fn format_complex(z: &Cyclotomic, precision: u32) -> String {
    let (re, im) = float_parts(z, precision);
    if z.is_real() || im == "0" {
        re
    } else if let Some(mag) = im.strip_prefix('-') {
        format!("{re} - {mag}i")
    } else {
        format!("{re} + {im}i")
    }
}

fn json_int(n: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("integer literal"))
}

fn json_float(s: &str) -> Value {
    serde_json::Number::from_str(s)
        .map(Value::Number)
        .unwrap_or_else(|_| Value::String(s.to_string()))
}

fn compute(cli: &Cli, p: &BigInt, q: &BigInt, out: &mut dyn Write) -> CliResult {
    let l = LensSpace::new(p.clone(), q.clone())?;
    let z = state_sum(&l);
    let cf = closed_form(&l);
    let surd = z.surd_form();
    let (re, im) = float_parts(&z, cli.precision);
    match cli.format {
        Format::Text => {
            writeln!(out, "Z({l})")?;
            writeln!(out, "exact: {z}")?;
            if let Some(s) = &surd {
                writeln!(out, "surd:  {s}")?;
            }
            writeln!(out, "float: {}", format_complex(&z, cli.precision))?;
            writeln!(out, "closed form: {}", cf.pretty())?;
            writeln!(out, "agrees: {}", z == cf)?;
        }
        Format::Json => {
            let v = json!({
                "p": json_int(p),
                "q": json_int(q),
                "exact": z,
                "canonical": z.to_string(),
                "surd": surd,
                "float_re": json_float(&re),
                "float_im": json_float(&im),
                "closed_form": cf,
                "agrees": z == cf,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        Format::Csv => {
            writeln!(out, "p,q,exact,float_re,float_im,agrees")?;
            writeln!(out, "{p},{q},{z},{re},{im},{}", z == cf)?;
        }
    }
    Ok(EXIT_OK)
}

fn print_table(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let p_max = cli.pmax.unwrap_or(DEFAULT_TABLE_PMAX);
    if p_max < 1 {
        return Err(CliError::Usage("--pmax must be at least 1".into()));
    }
    let rows = table(p_max);
    match cli.format {
        Format::Text => {
            writeln!(out, "{:>4} {:>4}  {:<7} {:<7} {:<28} value", "p", "q", "agrees", "refined", "float")?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>4} {:>4}  {:<7} {:<7} {:<28} {}",
                    r.p,
                    r.q,
                    r.agrees(),
                    r.agrees_refined(),
                    format_complex(&r.state_sum, cli.precision),
                    r.state_sum.pretty()
                )?;
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows.iter().map(|r| table_row_json(r, cli.precision)).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        Format::Csv => {
            writeln!(out, "p,q,exact,float_re,float_im,agrees")?;
            for r in &rows {
                let (re, im) = float_parts(&r.state_sum, cli.precision);
                writeln!(out, "{},{},{},{re},{im},{}", r.p, r.q, r.state_sum, r.agrees())?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn table_row_json(r: &TableRow, precision: u32) -> Value {
    let (re, im) = float_parts(&r.state_sum, precision);
    json!({
        "p": json_int(&r.p),
        "q": json_int(&r.q),
        "exact": r.state_sum,
        "closed_form": r.closed_form,
        "refined_closed_form": r.refined_closed_form,
        "float_re": json_float(&re),
        "float_im": json_float(&im),
        "agrees": r.agrees(),
        "agrees_refined": r.agrees_refined(),
    })
}

fn run_target(cli: &Cli, target: Target) -> std::result::Result<Vec<Report>, CliError> {
    let short = cli.pmax.unwrap_or(DEFAULT_PMAX_SHORT);
    let long = cli.pmax.unwrap_or(DEFAULT_PMAX_LONG);
    Ok(match target {
        Target::Relations => vec![verify_relations()],
        Target::Kernel => vec![verify_kernel_generators()],
        Target::WellDefined => vec![verify_well_defined_sweep(short, &WELL_DEFINED_SHIFTS)],
        Target::Periodicity => vec![verify_periodicity(long)?],
        Target::Closedform => vec![verify_closed_form(short)],
        Target::Corollary => vec![verify_corollary(long)],
        Target::All => {
            let mut all = Vec::new();
            for t in [
                Target::Relations,
                Target::Kernel,
                Target::WellDefined,
                Target::Periodicity,
                Target::Closedform,
                Target::Corollary,
            ] {
                all.extend(run_target(cli, t)?);
            }
            all
        }
    })
}

fn verify(cli: &Cli, target: Target, out: &mut dyn Write) -> CliResult {
    let reports = run_target(cli, target)?;
    let passed = reports.iter().all(Report::passed);
    match cli.format {
        Format::Text => {
            for r in &reports {
                write!(out, "{r}")?;
            }
            if reports.len() > 1 {
                let n = reports.iter().filter(|r| r.passed()).count();
                writeln!(
                    out,
                    "[{}] all: {n}/{} suites passed",
                    if passed { "PASS" } else { "FAIL" },
                    reports.len()
                )?;
            }
        }
        Format::Json => {
            let v: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite,
                        "pass": r.passed(),
                        "passed": r.pass_count(),
                        "total": r.checks.len(),
                        "checks": r.checks,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "pass": passed, "reports": v }))?)?;
        }
        Format::Csv => {
            writeln!(out, "suite,check,pass,expected,actual")?;
            for r in &reports {
                for c in &r.checks {
                    let (e, a) = c
                        .witness
                        .as_ref()
                        .map(|w| (w.expected.as_str(), w.actual.as_str()))
                        .unwrap_or(("", ""));
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        csv_field(&r.suite),
                        csv_field(&c.check_name),
                        c.pass,
                        csv_field(e),
                        csv_field(a)
                    )?;
                }
            }
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn homotopy(cli: &Cli, [p, q, p2, q2]: [&BigInt; 4], out: &mut dyn Write) -> CliResult {
    let l = LensSpace::new(p.clone(), q.clone())?;
    let m = LensSpace::new(p2.clone(), q2.clone())?;
    let eq = homotopy_equivalent(&l, &m);
    match cli.format {
        Format::Text => writeln!(out, "{l} ≃ {m}: {eq}")?,
        Format::Json => writeln!(
            out,
            "{}",
            json!({ "first": l.to_string(), "second": m.to_string(), "homotopy_equivalent": eq })
        )?,
        Format::Csv => {
            writeln!(out, "p,q,p2,q2,homotopy_equivalent")?;
            writeln!(out, "{p},{q},{p2},{q2},{eq}")?;
        }
    }
    Ok(EXIT_OK)
}
