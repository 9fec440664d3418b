//! Command-line driver. Exit codes: 0 pass/found, 1 bound violation or no
//! reduction found, 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperplane_core::algebra::component_dimension;
use hyperplane_core::macaulay::{iterated_shadow, macaulay_rep, shadow};
use hyperplane_core::reduction::{
    es_condition, exhaustive_reduction_search, find_annihilating_forms, find_ideal_reduction, ideal_condition,
    verify_certificate,
};
use hyperplane_core::{check_corollary, check_green, BigCount, Error as CoreError, Limits, SeededRng, Subject};
use serde::Serialize;
use thiserror::Error;

use crate::format::{parse_algebra, parse_ideal, FormatError, GRAMMAR};
use crate::report::{
    certificate_text, condition_text, green_text, oracle_text, CertificateRecord, ConditionRecord, Count, GreenRecord,
    OracleRecord,
};

#[derive(Debug, Parser)]
#[command(name = "hyperplane", version, about = "Macaulay bounds, hyperplane restriction checks and reductions over GF(p)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = OutputMode::Text)]
    pub format: OutputMode,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Field prime; overrides the file's `prime:` header (which defaults to 32003).
    #[arg(long)]
    pub prime: Option<u64>,
    /// Largest number of monomials accepted in one degree.
    #[arg(long, default_value_t = 4000)]
    pub max_basis: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct Sampling {
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Macaulay representations and shadows.
    Macaulay {
        #[command(subcommand)]
        op: MacaulayOp,
    },
    /// Dimension of one graded component.
    Hilbert {
        file: PathBuf,
        #[arg(long = "deg")]
        deg: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Hyperplane restriction bound for one generic form.
    GreenCheck {
        file: PathBuf,
        #[arg(long = "deg")]
        deg: u32,
        #[arg(long, default_value_t = 3)]
        trials: u32,
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        common: Common,
    },
    /// Iterated bound for several generic cuts.
    GreenCorollary {
        file: PathBuf,
        #[arg(long = "deg")]
        deg: u32,
        #[arg(long)]
        cuts: u32,
        #[arg(long, default_value_t = 3)]
        trials: u32,
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        common: Common,
    },
    /// Counting condition dim R_i < C(i + r, r).
    EsCheck {
        file: PathBuf,
        #[arg(long = "deg")]
        deg: u32,
        #[arg(long)]
        rank: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Linear forms killing the degree-i piece.
    EsFind {
        file: PathBuf,
        #[arg(long = "deg")]
        deg: u32,
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value_t = 10)]
        max_trials: u32,
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        common: Common,
    },
    /// Reduction I^i = (h_1..h_r) I^(i-1) of an equigenerated ideal.
    EsIdeal {
        file: PathBuf,
        #[arg(long)]
        power: u32,
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value_t = 10)]
        max_trials: u32,
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force every reduction over a small field.
    EsOracle {
        file: PathBuf,
        #[arg(long)]
        power: u32,
        #[arg(long)]
        rank: u32,
        #[arg(long = "prime-small")]
        prime_small: u64,
        #[arg(long, default_value_t = 4000)]
        max_basis: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum MacaulayOp {
    /// d'th Macaulay representation of c.
    Rep {
        #[arg(value_parser = parse_count)]
        c: BigCount,
        d: u32,
        #[command(flatten)]
        output: Output,
    },
    /// c_<d>.
    Shadow {
        #[arg(value_parser = parse_count)]
        c: BigCount,
        d: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Sum of C(k_j - r, j) over the d'th coefficients of c.
    Iterate {
        #[arg(value_parser = parse_count)]
        c: BigCount,
        d: u32,
        r: u64,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_count(s: &str) -> Result<BigCount, String> {
    s.parse().map_err(|_| format!("`{s}` is not a non-negative integer"))
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

/// Outcome of a successful command: rendered output and exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load_algebra(path: &Path, prime: Option<u64>) -> Result<hyperplane_core::PresentedAlgebra, CliError> {
    parse_algebra(&read(path)?, prime).map_err(|source| CliError::Format { path: path.display().to_string(), source })
}

fn load_ideal(path: &Path, prime: Option<u64>) -> Result<hyperplane_core::EquigeneratedIdeal, CliError> {
    parse_ideal(&read(path)?, prime).map_err(|source| CliError::Format { path: path.display().to_string(), source })
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn render<T: Serialize>(mode: OutputMode, text: String, value: &T) -> Result<String, CliError> {
    match mode {
        OutputMode::Text => Ok(text),
        OutputMode::Json => json(value),
    }
}

#[derive(Serialize)]
struct RepRecord<'a> {
    c: Count,
    d: u32,
    coeffs: &'a [u64],
}

#[derive(Serialize)]
struct ValueRecord {
    c: Count,
    d: u32,
    r: u64,
    value: Count,
}

#[derive(Serialize)]
struct HilbertRecord {
    n: usize,
    p: u64,
    d: u32,
    dim: Count,
}

fn macaulay(op: MacaulayOp) -> Result<Outcome, CliError> {
    let text = match op {
        MacaulayOp::Rep { c, d, output } => {
            let rep = macaulay_rep(&c, d)?;
            let record = RepRecord { c: Count(c.clone()), d, coeffs: rep.coeffs() };
            render(output.format, format!("{c} = {rep}\n"), &record)?
        }
        MacaulayOp::Shadow { c, d, output } => {
            let value = shadow(&c, d)?;
            let record = ValueRecord { c: Count(c), d, r: 1, value: Count(value.clone()) };
            render(output.format, format!("{value}\n"), &record)?
        }
        MacaulayOp::Iterate { c, d, r, output } => {
            let value = iterated_shadow(&c, d, r)?;
            let record = ValueRecord { c: Count(c), d, r, value: Count(value.clone()) };
            render(output.format, format!("{value}\n"), &record)?
        }
    };
    Ok(Outcome::ok(text))
}

fn limits(max_basis: usize) -> Limits {
    Limits { max_basis }
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Macaulay { op } => macaulay(op),
        Command::Hilbert { file, deg, common } => {
            let a = load_algebra(&file, common.prime)?;
            let dim = component_dimension(&a, deg, &limits(common.max_basis))?;
            let text = format!(
                "command = hilbert\nn = {}\np = {}\ngenerators = {}\nd = {deg}\ndim = {dim}\n",
                a.nvars(),
                a.field().modulus(),
                a.generators().len()
            );
            let record = HilbertRecord { n: a.nvars(), p: a.field().modulus(), d: deg, dim: Count(dim) };
            Ok(Outcome::ok(render(common.output.format, text, &record)?))
        }
        Command::GreenCheck { file, deg, trials, sampling, common } => {
            let a = load_algebra(&file, common.prime)?;
            let report = check_green(&a, deg, trials, &SeededRng::new(sampling.seed), &limits(common.max_basis))?;
            let text = render(common.output.format, green_text("green-check", &report, trials), &GreenRecord::from(&report))?;
            Ok(Outcome { text, code: if report.pass { 0 } else { 1 } })
        }
        Command::GreenCorollary { file, deg, cuts, trials, sampling, common } => {
            let a = load_algebra(&file, common.prime)?;
            let report =
                check_corollary(&a, deg, cuts, trials, &SeededRng::new(sampling.seed), &limits(common.max_basis))?;
            let text =
                render(common.output.format, green_text("green-corollary", &report, trials), &GreenRecord::from(&report))?;
            Ok(Outcome { text, code: if report.pass { 0 } else { 1 } })
        }
        Command::EsCheck { file, deg, rank, common } => {
            let a = load_algebra(&file, common.prime)?;
            let c = es_condition(&a, deg, rank, &limits(common.max_basis))?;
            let p = a.field().modulus();
            let record = ConditionRecord {
                n: a.nvars(),
                p,
                i: deg,
                r: rank,
                dim: Count(c.dim.clone()),
                threshold: Count(c.threshold.clone()),
                holds: c.holds,
            };
            let text = render(common.output.format, condition_text("es-check", a.nvars(), p, deg, rank, &c), &record)?;
            Ok(Outcome { text, code: if c.holds { 0 } else { 1 } })
        }
        Command::EsFind { file, deg, rank, max_trials, sampling, common } => {
            let a = load_algebra(&file, common.prime)?;
            let lim = limits(common.max_basis);
            let condition = es_condition(&a, deg, rank, &lim)?;
            let cert = find_annihilating_forms(&a, deg, rank, max_trials, &SeededRng::new(sampling.seed), &lim)?;
            let verified = verify_certificate(Subject::Algebra(&a), &cert, &lim)?;
            let text = certificate_text("es-find", &cert, a.names(), a.field().modulus(), &condition, verified);
            let record = CertificateRecord::new(&cert, a.names(), verified);
            Ok(Outcome { text: render(common.output.format, text, &record)?, code: if verified { 0 } else { 1 } })
        }
        Command::EsIdeal { file, power, rank, max_trials, sampling, common } => {
            let ideal = load_ideal(&file, common.prime)?;
            let lim = limits(common.max_basis);
            let condition = ideal_condition(&ideal, power, rank, &lim)?;
            let cert = find_ideal_reduction(&ideal, power, rank, max_trials, &SeededRng::new(sampling.seed), &lim)?;
            let verified = verify_certificate(Subject::Ideal(&ideal), &cert, &lim)?;
            let text = certificate_text("es-ideal", &cert, ideal.names(), ideal.field().modulus(), &condition, verified);
            let record = CertificateRecord::new(&cert, ideal.names(), verified);
            Ok(Outcome { text: render(common.output.format, text, &record)?, code: if verified { 0 } else { 1 } })
        }
        Command::EsOracle { file, power, rank, prime_small, max_basis, output } => {
            let ideal = load_ideal(&file, Some(prime_small))?;
            let lim = limits(max_basis);
            let condition = ideal_condition(&ideal, power, rank, &lim)?;
            let tuples = exhaustive_reduction_search(&ideal, power, rank, &lim)?;
            let record = OracleRecord {
                q: prime_small,
                i: power,
                r: rank,
                dim: Count(condition.dim.clone()),
                threshold: Count(condition.threshold.clone()),
                condition: condition.holds,
                count: tuples.len(),
                tuples,
            };
            let code = if record.tuples.is_empty() { 1 } else { 0 };
            Ok(Outcome { text: render(output.format, oracle_text(&record), &record)?, code })
        }
    }
}

fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Core(CoreError::NotFound { .. } | CoreError::ConditionNotMet { .. }) => 1,
        _ => 2,
    }
}

/// Runs the CLI on `argv` (including the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            outcome.code
        }
        Err(e) => {
            let code = exit_code(&e);
            let _ = writeln!(err, "error: {e}");
            if matches!(e, CliError::Format { .. }) {
                let _ = writeln!(err, "{GRAMMAR}");
            }
            code
        }
    }
}
