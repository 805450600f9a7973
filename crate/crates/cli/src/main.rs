//! `gen-euler` — exact generalized Euler numbers from the command line.
//!
//! Subcommands:
//! - `compute`: tabulate one method's values
//! - `crosscheck`: run every method side by side and require agreement
//! - `involution`: audit the sign-reversing involution on partitions
//! - `congruence`: sweep one congruence family
//! - `mobius`: verify the Möbius-inversion group-action argument
//!
//! Exit codes are stable: 0 when everything computed and every verification
//! passed, 1 when a verification failed or an enumeration cap was exceeded,
//! 2 on usage errors.  Data goes to stdout (or `--output FILE`), timing and
//! diagnostics to stderr.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gen_euler::congruences::{self, CongruenceKind};
use gen_euler::euler::{self, Method};
use gen_euler::mobius;
use gen_euler::partitions;
use gen_euler::{Error, DEFAULT_ENUMERATION_CAP};

#[derive(Parser)]
#[command(
    name = "gen-euler",
    version,
    about = "Exact generalized Euler numbers: tables, involutions, congruences, Möbius inversion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate generalized Euler numbers for n = 0..=n_max with one method.
    Compute(ComputeArgs),
    /// Run every method side by side; exit 0 only if all values agree.
    Crosscheck(CrosscheckArgs),
    /// Audit the sign-reversing involution on the d-divisible partitions of 1..=n.
    Involution(InvolutionArgs),
    /// Sweep one congruence family over n = 1..=n_max.
    Congruence(CongruenceArgs),
    /// Verify the C_p x C_p Möbius-inversion argument on the ground set 1..=p*n.
    Mobius(MobiusArgs),
}

#[derive(Copy, Clone, ValueEnum)]
enum MethodArg {
    Recursion,
    Series,
    Compositions,
    Determinant,
    Bruteforce,
    Alternating,
}

impl From<MethodArg> for Method {
    fn from(arg: MethodArg) -> Method {
        match arg {
            MethodArg::Recursion => Method::Recursion,
            MethodArg::Series => Method::Series,
            MethodArg::Compositions => Method::Compositions,
            MethodArg::Determinant => Method::Determinant,
            MethodArg::Bruteforce => Method::Bruteforce,
            MethodArg::Alternating => Method::Alternating,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
    Bfile,
}

#[derive(Copy, Clone, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, ValueEnum)]
enum VerdictFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
enum CongruenceName {
    Mod2,
    Mod3,
    P2,
    #[value(name = "2p2")]
    TwoP2,
}

impl From<CongruenceName> for CongruenceKind {
    fn from(name: CongruenceName) -> CongruenceKind {
        match name {
            CongruenceName::Mod2 => CongruenceKind::Mod2,
            CongruenceName::Mod3 => CongruenceKind::Mod3,
            CongruenceName::P2 => CongruenceKind::PrimeSquared,
            CongruenceName::TwoP2 => CongruenceKind::TwoPrimeSquared,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// Block-size modulus (>= 2).
    #[arg(long)]
    d: usize,
    /// Largest index to tabulate.
    #[arg(long = "n-max")]
    n_max: usize,
    /// Computation method.
    #[arg(long, value_enum, default_value_t = MethodArg::Recursion)]
    method: MethodArg,
    /// Output format.
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    /// Enumeration budget for the brute-force methods.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CrosscheckArgs {
    /// Block-size modulus (>= 2).
    #[arg(long)]
    d: usize,
    /// Largest index to compare.
    #[arg(long = "n-max")]
    n_max: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Enumeration budget; brute-force methods are skipped beyond it.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct InvolutionArgs {
    /// Block-size modulus (>= 2); must divide n.
    #[arg(long)]
    d: usize,
    /// Ground-set size.
    #[arg(long)]
    n: usize,
    /// Also print the full pairing and the fixed points.
    #[arg(long)]
    pairs: bool,
    /// Output format.
    #[arg(long, value_enum, default_value_t = VerdictFormat::Text)]
    format: VerdictFormat,
    /// Enumeration budget.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CongruenceArgs {
    /// Congruence family.
    #[arg(long, value_enum)]
    name: CongruenceName,
    /// Block-size modulus, required for mod2 and mod3.
    #[arg(long)]
    d: Option<usize>,
    /// Prime parameter, required for p2 and 2p2.
    #[arg(long)]
    p: Option<usize>,
    /// Sweep n = 1..=n_max.
    #[arg(long = "n-max")]
    n_max: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MobiusArgs {
    /// The prime p.
    #[arg(long)]
    p: usize,
    /// Ground-set multiplier: the action runs on 1..=p*n, n >= 2.
    #[arg(long)]
    n: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = VerdictFormat::Text)]
    format: VerdictFormat,
    /// Enumeration budget.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// A failed run: what to print on stderr and which code to exit with.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Failure {
        Failure { code: 2, message }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        // Cap overruns are runtime failures (exit 1); everything else the
        // library rejects is a bad parameter (exit 2).
        let code = match err {
            Error::CapExceeded { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Failure {
        Failure {
            code: 1,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Compute(args) => run_compute(args),
        Command::Crosscheck(args) => run_crosscheck(args),
        Command::Involution(args) => run_involution(args),
        Command::Congruence(args) => run_congruence(args),
        Command::Mobius(args) => run_mobius(args),
    };
    match run {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("gen-euler: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// Writes the assembled output to the file or stdout and logs timing.
fn emit(body: &str, output: Option<&Path>, started: Instant) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, body)?,
        None => io::stdout().write_all(body.as_bytes())?,
    }
    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    Ok(())
}

fn run_compute(args: ComputeArgs) -> Result<ExitCode, Failure> {
    let started = Instant::now();
    let table = euler::table(args.d, args.n_max, args.method.into(), args.cap)?;
    let body = match args.format {
        TableFormat::Text => render::table_text(&table),
        TableFormat::Csv => render::table_csv(&table),
        TableFormat::Bfile => render::table_bfile(&table),
        TableFormat::Json => render::table_json(&table, args.cap, started.elapsed().as_millis()),
    };
    emit(&body, args.output.as_deref(), started)?;
    Ok(ExitCode::SUCCESS)
}

fn run_crosscheck(args: CrosscheckArgs) -> Result<ExitCode, Failure> {
    let started = Instant::now();
    let report = euler::crosscheck(args.d, args.n_max, &Method::ALL, args.cap)?;
    let body = match args.format {
        ReportFormat::Text => render::crosscheck_text(&report),
        ReportFormat::Csv => render::crosscheck_csv(&report),
        ReportFormat::Json => {
            render::crosscheck_json(&report, args.cap, started.elapsed().as_millis())
        }
    };
    emit(&body, args.output.as_deref(), started)?;
    Ok(exit_by(report.all_agree))
}

fn run_involution(args: InvolutionArgs) -> Result<ExitCode, Failure> {
    let started = Instant::now();
    if args.d == 0 || !args.n.is_multiple_of(args.d) {
        return Err(Failure::usage(format!(
            "n = {} is not a multiple of d = {}",
            args.n, args.d
        )));
    }
    let audit = partitions::involution_audit(args.n, args.d, args.cap, args.pairs)?;
    let body = match args.format {
        VerdictFormat::Text => render::involution_text(&audit),
        VerdictFormat::Json => {
            render::involution_json(&audit, args.cap, started.elapsed().as_millis())
        }
    };
    emit(&body, args.output.as_deref(), started)?;
    Ok(exit_by(audit.pass()))
}

fn run_congruence(args: CongruenceArgs) -> Result<ExitCode, Failure> {
    let started = Instant::now();
    let kind: CongruenceKind = args.name.into();
    let param = match (kind.takes_d(), args.d, args.p) {
        (true, Some(d), None) => d,
        (false, None, Some(p)) => p,
        (true, _, _) => {
            return Err(Failure::usage(format!(
                "congruence {kind} takes --d (and no --p)"
            )))
        }
        (false, _, _) => {
            return Err(Failure::usage(format!(
                "congruence {kind} takes --p (and no --d)"
            )))
        }
    };
    let report = congruences::congruence_sweep(kind, param, args.n_max)?;
    let body = match args.format {
        ReportFormat::Text => render::congruence_text(&report),
        ReportFormat::Csv => render::congruence_csv(&report),
        ReportFormat::Json => render::congruence_json(&report, started.elapsed().as_millis()),
    };
    emit(&body, args.output.as_deref(), started)?;
    Ok(exit_by(report.pass()))
}

fn run_mobius(args: MobiusArgs) -> Result<ExitCode, Failure> {
    let started = Instant::now();
    let report = mobius::verify_inversion(args.p, args.n, args.cap)?;
    let body = match args.format {
        VerdictFormat::Text => render::mobius_text(&report),
        VerdictFormat::Json => {
            render::mobius_json(&report, args.cap, started.elapsed().as_millis())
        }
    };
    emit(&body, args.output.as_deref(), started)?;
    Ok(exit_by(report.pass()))
}

/// Exit 0 when the verification passed, 1 when it failed.
fn exit_by(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
