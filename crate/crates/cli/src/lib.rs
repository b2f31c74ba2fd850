//! Command-line front end for `conic-points`.
//!
//! Exit codes: 0 success, 1 invalid conic or failed precondition, 2 parse
//! error, 3 solver/oracle mismatch under `--check`, 4 `oracle` on a conic
//! with I = 0 without `--bound`.

pub mod check;
pub mod document;

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use conic_points::numeric::{Natural, DEFAULT_DIVISOR_CAP};
use conic_points::oracle::{brute_force, solution_bound, SearchBound};
use conic_points::solver::{
    solve_difference_of_squares, theorem1_conic, theorem1_points, SumFormOutcome,
};
use conic_points::{solve, validate, Coefficients, Conic, Error, SolveOptions};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use check::{check_solution, CheckOutcome};
pub use document::{parse_integer, ConicDocument, Kind, ParseError, ResultDocument};

pub const DIVISOR_CAP_ENV: &str = "CONIC_DIVISOR_CAP";

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  invalid conic or violated precondition
  2  unparsable arguments or input
  3  --check found a solver/oracle mismatch
  4  oracle on a conic with I = 0 and no --bound

Environment:
  CONIC_DIVISOR_CAP  largest |I| to factor (default 100000000000000)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    InvalidConic = 1,
    ParseError = 2,
    Mismatch = 3,
    MissingBound = 4,
}

#[derive(Debug, Parser)]
#[command(name = "conic", version, about = "Integral points on conics with a square discriminant", after_help = EXIT_CODES)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct ConicInput {
    /// alpha beta gamma delta epsilon J
    #[arg(value_name = "COEFF", allow_negative_numbers = true, num_args = 0..=6)]
    pub coefficients: Vec<String>,
    /// Read the coefficients from a JSON document instead
    #[arg(long, value_name = "FILE", conflicts_with = "coefficients")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find every integral point (or the two lines when I = 0)
    Solve {
        #[command(flatten)]
        conic: ConicInput,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Skip cancelling the content of the factor forms
        #[arg(long)]
        no_reduce: bool,
        /// Compare against the brute-force oracle; exit 3 on mismatch
        #[arg(long)]
        check: bool,
        /// Search box half-width for --check
        #[arg(long, allow_negative_numbers = true)]
        bound: Option<String>,
    },
    /// Print k, I, delta_q = δ² − 4αJ and m = 2αε − βδ
    Invariants {
        #[command(flatten)]
        conic: ConicInput,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Brute-force search in |x|, |y| ≤ bound
    Oracle {
        #[command(flatten)]
        conic: ConicInput,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Search box half-width (default: derived from the invariants)
        #[arg(long, allow_negative_numbers = true)]
        bound: Option<String>,
    },
    /// Closed-form points for x² + βxy + γy² + δx + εy + J with I = 2^n
    Theorem1 {
        #[arg(allow_negative_numbers = true)]
        beta: String,
        #[arg(allow_negative_numbers = true)]
        delta: String,
        #[arg(allow_negative_numbers = true)]
        epsilon: String,
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Points of l²x² − m²y² + J = 0
    Sumform {
        #[arg(allow_negative_numbers = true)]
        l: String,
        #[arg(allow_negative_numbers = true)]
        m: String,
        #[arg(allow_negative_numbers = true)]
        j: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// What a command produced; `main` prints it and exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: ExitStatus,
}

impl Output {
    fn document(doc: &ResultDocument, format: Format, status: ExitStatus) -> Self {
        let (stdout, stderr) = match (format, doc.kind) {
            (Format::Json, _) => (doc.to_json(), String::new()),
            (Format::Text, Kind::Invalid) => (String::new(), doc.to_text()),
            (Format::Text, _) => (doc.to_text(), String::new()),
        };
        Output {
            stdout,
            stderr,
            status,
        }
    }

    fn parse_error(err: ParseError) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            status: ExitStatus::ParseError,
        }
    }

    fn invalid(err: &Error, format: Format) -> Self {
        Self::document(
            &ResultDocument::invalid(err.code(), err.to_string()),
            format,
            ExitStatus::InvalidConic,
        )
    }
}

/// Divisor cap from the environment value, if any.
pub fn divisor_cap(env: Option<&str>) -> Result<Natural, ParseError> {
    match env {
        None => Ok(Natural::from(DEFAULT_DIVISOR_CAP)),
        Some(raw) => {
            let value = parse_integer(raw.trim())?;
            value
                .to_biguint()
                .ok_or_else(|| ParseError(format!("{DIVISOR_CAP_ENV} must be non-negative")))
        }
    }
}

fn read_coefficients(input: &ConicInput) -> Result<Coefficients, ParseError> {
    let doc = match &input.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| ParseError(format!("cannot read {}: {e}", path.display())))?;
            ConicDocument::from_json(&text)?
        }
        None => ConicDocument::from_args(&input.coefficients)?,
    };
    doc.coefficients()
}

fn parse_bound(raw: &Option<String>) -> Result<Option<BigInt>, ParseError> {
    raw.as_deref()
        .map(|s| {
            let b = parse_integer(s)?;
            if b.is_negative() {
                return Err(ParseError(format!("bound must be non-negative, got {b}")));
            }
            Ok(b)
        })
        .transpose()
}

macro_rules! try_parse {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Output::parse_error(err),
        }
    };
}

macro_rules! try_valid {
    ($e:expr, $format:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Output::invalid(&err, $format),
        }
    };
}

/// Runs one command. `cap_env` is the raw value of `CONIC_DIVISOR_CAP`.
pub fn run(cli: Cli, cap_env: Option<&str>) -> Output {
    let cap = try_parse!(divisor_cap(cap_env));
    match cli.command {
        Command::Solve {
            conic,
            format,
            no_reduce,
            check,
            bound,
        } => {
            let coeffs = try_parse!(read_coefficients(&conic));
            let bound = try_parse!(parse_bound(&bound));
            let conic = try_valid!(validate(coeffs), format);
            let options = SolveOptions {
                reduce: !no_reduce,
                divisor_cap: cap,
            };
            let set = try_valid!(solve(&conic, &options), format);
            let doc = ResultDocument::from_solution(conic.invariants(), &set);
            let mut out = Output::document(&doc, format, ExitStatus::Success);
            if check {
                if let CheckOutcome::Mismatch { missing, extra } =
                    check_solution(&conic, &set, bound.as_ref())
                {
                    out.status = ExitStatus::Mismatch;
                    out.stderr += &format!(
                        "check failed: oracle points missing from solver {missing:?}, solver points not found by oracle {extra:?}\n"
                    );
                }
            }
            out
        }
        Command::Invariants { conic, format } => {
            let coeffs = try_parse!(read_coefficients(&conic));
            let conic = try_valid!(validate(coeffs), format);
            Output::document(
                &ResultDocument::invariants_only(conic.invariants()),
                format,
                ExitStatus::Success,
            )
        }
        Command::Oracle {
            conic,
            format,
            bound,
        } => {
            let coeffs = try_parse!(read_coefficients(&conic));
            let bound = try_parse!(parse_bound(&bound));
            let conic = try_valid!(validate(coeffs), format);
            let search = match bound {
                Some(b) => SearchBound::square(b),
                None if conic.invariants().big_i.is_zero() => {
                    return Output {
                        stdout: String::new(),
                        stderr: "error: I = 0, the conic has infinitely many candidate points; pass --bound\n".into(),
                        status: ExitStatus::MissingBound,
                    }
                }
                None => try_valid!(solution_bound(&conic), format),
            };
            let points = brute_force(&conic, &search);
            Output::document(
                &ResultDocument::finite(Some(conic.invariants()), &points),
                format,
                ExitStatus::Success,
            )
        }
        Command::Theorem1 {
            beta,
            delta,
            epsilon,
            n,
            format,
        } => {
            let beta = try_parse!(parse_integer(&beta));
            let delta = try_parse!(parse_integer(&delta));
            let epsilon = try_parse!(parse_integer(&epsilon));
            let conic = try_valid!(theorem1_conic(&beta, &delta, &epsilon, n), format);
            let points = try_valid!(theorem1_points(&beta, &delta, &epsilon, n), format);
            let doc = ResultDocument::finite(Some(conic.invariants()), &points)
                .with_conic(conic.coefficients());
            Output::document(&doc, format, ExitStatus::Success)
        }
        Command::Sumform { l, m, j, format } => {
            let l = try_parse!(parse_integer(&l));
            let m = try_parse!(parse_integer(&m));
            let j = try_parse!(parse_integer(&j));
            let options = SolveOptions {
                reduce: true,
                divisor_cap: cap,
            };
            let outcome = try_valid!(solve_difference_of_squares(&l, &m, &j, &options), format);
            let conic = try_valid!(
                Conic::new(
                    &l * &l,
                    BigInt::zero(),
                    -(&m * &m),
                    BigInt::zero(),
                    BigInt::zero(),
                    j
                ),
                format
            );
            let doc = match outcome {
                SumFormOutcome::Points(points) => {
                    ResultDocument::finite(Some(conic.invariants()), &points)
                }
                SumFormOutcome::Unsolvable(reason) => ResultDocument {
                    obstruction: Some(reason.code().to_owned()),
                    ..ResultDocument::finite(Some(conic.invariants()), &[])
                },
            };
            Output::document(
                &doc.with_conic(conic.coefficients()),
                format,
                ExitStatus::Success,
            )
        }
    }
}

/// Parses the point list of a text-format result.
pub fn points_from_text(text: &str) -> Result<BTreeSet<(BigInt, BigInt)>, ParseError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(x), Some(y), None) => Ok((parse_integer(x)?, parse_integer(y)?)),
                _ => Err(ParseError(format!("not a point line: {line:?}"))),
            }
        })
        .collect()
}
