//! `mom`: exact values, polynomials, tables, and verification runs for the
//! moments of moments of CUE characteristic polynomials.

mod cache;
mod document;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;

use mom_core::closed_forms::{keating_snaith_poly, n1_value};
use mom_core::rational::{rational_string, Int, Rational};
use mom_core::reconstructor::{mom_polynomial, verify_suite, Level};
use mom_core::rssyt::count_rssyt;
use mom_core::{cfkrs, Error as CoreError};

use cache::{CacheOutcome, CacheRecord};
use document::{
    factor, poly_csv, CoeffEntry, PolyDocument, TableDocument, TableRow, ValueDocument,
    VerifyCheck, VerifyDocument,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CACHE_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mom",
    version,
    about = "Exact moments of moments of CUE characteristic polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact integer MoM_N(k, beta) for one N.
    Value {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        beta: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        #[arg(long, value_enum, default_value_t = BasicFormat::Text)]
        format: BasicFormat,
        /// Skip the on-disk result cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Reconstruct the full polynomial in N.
    Poly {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        beta: u32,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
        /// Extra interpolation samples checked against the result.
        #[arg(long, default_value_t = 2)]
        guard: u32,
    },
    /// Tabulate exact values over a range of N.
    Table {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        beta: u32,
        /// Inclusive range, e.g. 0..5.
        #[arg(long = "n-range")]
        n_range: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Run the self-verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
        #[arg(long, value_enum, default_value_t = BasicFormat::Text)]
        format: BasicFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Dp,
    Cfkrs,
    #[value(name = "closed-form")]
    ClosedForm,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Dp => "dp",
            Method::Cfkrs => "cfkrs",
            Method::ClosedForm => "closed-form",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasicFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
    Extended,
}

impl LevelArg {
    fn to_level(self) -> Level {
        match self {
            LevelArg::Fast => Level::Fast,
            LevelArg::Full => Level::Full,
            LevelArg::Extended => Level::Extended,
        }
    }

    fn name(self) -> &'static str {
        match self {
            LevelArg::Fast => "fast",
            LevelArg::Full => "full",
            LevelArg::Extended => "extended",
        }
    }
}

struct AppError {
    code: u8,
    message: String,
}

impl AppError {
    fn usage(message: impl Into<String>) -> Self {
        AppError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn failure(message: impl Into<String>) -> Self {
        AppError {
            code: EXIT_FAILURE,
            message: message.into(),
        }
    }
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::InvalidArgument(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        AppError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::failure(format!("cache i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, AppError> {
    match command {
        Command::Value {
            k,
            beta,
            n,
            method,
            format,
            no_cache,
        } => cmd_value(k, beta, n, method, format, no_cache),
        Command::Poly {
            k,
            beta,
            format,
            guard,
        } => cmd_poly(k, beta, format, guard),
        Command::Table {
            k,
            beta,
            n_range,
            format,
        } => cmd_table(k, beta, &n_range, format),
        Command::Verify { level, format } => cmd_verify(level, format),
    }
}

fn check_spec(k: u32, beta: u32) -> Result<(), AppError> {
    if k == 0 || beta == 0 {
        return Err(AppError::usage("k and beta must be positive"));
    }
    Ok(())
}

fn compute_value(k: u32, beta: u32, n: u32, method: Method) -> Result<Int, AppError> {
    match method {
        Method::Dp => Ok(count_rssyt(k, beta, n)?),
        Method::Cfkrs => Ok(cfkrs::ct_extract(k, beta, n)?),
        Method::ClosedForm => {
            if n == 0 {
                Ok(Int::one())
            } else if n == 1 {
                Ok(n1_value(k, beta))
            } else if k == 1 {
                let v = keating_snaith_poly(beta)?.eval_int(n as i64);
                debug_assert!(v.denom().is_one());
                Ok(v.to_integer())
            } else {
                Err(AppError::usage(format!(
                    "closed-form is only available for k = 1 or N <= 1 \
                     (got k = {k}, N = {n}); use dp or cfkrs"
                )))
            }
        }
    }
}

fn cmd_value(
    k: u32,
    beta: u32,
    n: u32,
    method: Method,
    format: BasicFormat,
    no_cache: bool,
) -> Result<ExitCode, AppError> {
    check_spec(k, beta)?;
    let start = Instant::now();
    let value = compute_value(k, beta, n, method)?;
    let elapsed_ms = start.elapsed().as_millis();

    if !no_cache {
        let record = CacheRecord {
            k,
            beta,
            n,
            method: method.name().to_string(),
            value: value.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        };
        match cache::check_and_store(&cache::cache_dir(), &record)? {
            CacheOutcome::Stored | CacheOutcome::Confirmed => {}
            CacheOutcome::Mismatch { stored } => {
                return Err(AppError {
                    code: EXIT_CACHE_MISMATCH,
                    message: format!(
                        "cache mismatch for (k={k}, beta={beta}, N={n}, {}): \
                         stored {stored}, recomputed {value}",
                        method.name()
                    ),
                });
            }
        }
    }

    match format {
        BasicFormat::Text => println!("{value}"),
        BasicFormat::Json => {
            let doc = ValueDocument {
                k,
                beta,
                n,
                method: method.name().to_string(),
                value: value.to_string(),
                elapsed_ms,
            };
            println!("{}", serde_json::to_string(&doc).expect("serializes"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_poly(k: u32, beta: u32, format: PolyFormat, guard: u32) -> Result<ExitCode, AppError> {
    check_spec(k, beta)?;
    let start = Instant::now();
    let p = mom_polynomial(k, beta, guard)?;
    let elapsed_ms = start.elapsed().as_millis();
    let factored = factor(&p);

    match format {
        PolyFormat::Text => {
            println!("{p}");
            println!("degree: {}", p.degree().unwrap_or(0));
            println!(
                "leading coefficient: {}",
                rational_string(p.leading_coeff().unwrap_or(&Rational::one()))
            );
            println!("factored: {}", factored.text());
        }
        PolyFormat::Latex => println!("{}", factored.latex()),
        PolyFormat::Csv => print!("{}", poly_csv(k, beta, &p)),
        PolyFormat::Json => {
            let doc = PolyDocument {
                k,
                beta,
                method: "dp".to_string(),
                degree: p.degree().unwrap_or(0) as u64,
                coefficients: p.coeffs().iter().map(CoeffEntry::from_rational).collect(),
                factors: factored.factor_strings(),
                elapsed_ms,
            };
            println!("{}", serde_json::to_string(&doc).expect("serializes"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(spec: &str) -> Result<(u32, u32), AppError> {
    let (a, b) = spec
        .split_once("..")
        .ok_or_else(|| AppError::usage(format!("invalid range '{spec}', expected a..b")))?;
    let from: u32 = a
        .parse()
        .map_err(|_| AppError::usage(format!("invalid range start '{a}'")))?;
    let to: u32 = b
        .parse()
        .map_err(|_| AppError::usage(format!("invalid range end '{b}'")))?;
    if from > to {
        return Err(AppError::usage(format!("empty range {from}..{to}")));
    }
    Ok((from, to))
}

fn cmd_table(k: u32, beta: u32, n_range: &str, format: TableFormat) -> Result<ExitCode, AppError> {
    check_spec(k, beta)?;
    let (from, to) = parse_range(n_range)?;
    let start = Instant::now();
    let mut rows = Vec::new();
    for n in from..=to {
        let value = count_rssyt(k, beta, n)?;
        rows.push(TableRow {
            n,
            value: value.to_string(),
        });
    }
    let elapsed_ms = start.elapsed().as_millis();

    match format {
        TableFormat::Csv => {
            println!("k,beta,n,value");
            for row in &rows {
                println!("{k},{beta},{},{}", row.n, row.value);
            }
        }
        TableFormat::Json => {
            let doc = TableDocument {
                k,
                beta,
                method: "dp".to_string(),
                rows,
                elapsed_ms,
            };
            println!("{}", serde_json::to_string(&doc).expect("serializes"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(level: LevelArg, format: BasicFormat) -> Result<ExitCode, AppError> {
    let start = Instant::now();
    let report = verify_suite(level.to_level());
    let elapsed_ms = start.elapsed().as_millis();
    let all_passed = report.all_passed();

    match format {
        BasicFormat::Text => {
            for rec in &report.records {
                let status = if rec.passed { "PASS" } else { "FAIL" };
                println!("{status} {} {} ({} ms)", rec.name, rec.spec, rec.elapsed_ms);
                if !rec.passed {
                    println!("     expected: {}", rec.expected);
                    println!("     actual:   {}", rec.actual);
                }
            }
            let failed = report.records.iter().filter(|r| !r.passed).count();
            println!(
                "{} checks, {failed} failed, level {} ({elapsed_ms} ms)",
                report.records.len(),
                level.name()
            );
        }
        BasicFormat::Json => {
            let doc = VerifyDocument {
                level: level.name().to_string(),
                all_passed,
                checks: report
                    .records
                    .iter()
                    .map(|r| VerifyCheck {
                        name: r.name.clone(),
                        spec: r.spec.to_string(),
                        passed: r.passed,
                        expected: r.expected.clone(),
                        actual: r.actual.clone(),
                        elapsed_ms: r.elapsed_ms,
                    })
                    .collect(),
                elapsed_ms,
            };
            println!("{}", serde_json::to_string(&doc).expect("serializes"));
        }
    }

    if all_passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_FAILURE))
    }
}
