// SPDX-License-Identifier: Apache-2.0

//! `klen`: generalized length functions, exact Bernoulli measures,
//! budget-checked prefix-free codeword allocation, table machines, and a
//! sampling lab, on the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 budget violation
//! (the offending request index goes to stderr) or failed verification,
//! 3 enumeration cap exceeded.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};

use klen::formats;
use klen_core::algebraic::{classify_bernoulli, ClassifyError};
use klen_core::allocator::allocate_stream;
use klen_core::machines::deficiency_set;
use klen_core::{lab, parse_decimal, BitString, KLengthSpec};

const EXIT_USAGE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "klen", version, about = "k-length functions, p_k-measures, and prefix-free coding tools", max_term_width = 100)]
struct Cli {
    /// Working precision in bits for displayed real values.
    #[arg(long, global = true, env = "KLEN_PRECISION", default_value_t = 128)]
    precision: u32,
    /// Cap on the number of strings any enumeration may produce.
    #[arg(long, global = true, env = "KLEN_CAP", default_value_t = 1 << 20)]
    cap: u64,
    /// Write primary output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// k-length of a string, or size/contents of a whole level.
    Length(LengthArgs),
    /// The root table (k, p_k) or the conversion-factor table as CSV.
    Tables(TablesArgs),
    /// Allocate a prefix-free codebook for a request stream.
    Kc(KcArgs),
    /// Verify a codebook file (prefix-freeness, measure accounting).
    Verify(VerifyArgs),
    /// Classify a Bernoulli parameter: find k with p^k = 1 - p.
    Classify(ClassifyArgs),
    /// Operations on table machines (codebook files).
    #[command(subcommand)]
    Machine(MachineCommand),
    /// Information content measures: validate or compile to a machine.
    #[command(subcommand)]
    Icm(IcmCommand),
    /// Seeded sampling from lambda_j and rate reports.
    #[command(subcommand)]
    Lab(LabCommand),
}

#[derive(Args)]
struct LengthArgs {
    #[arg(long)]
    k: u32,
    /// Which bit costs k (the other costs 1).
    #[arg(long, default_value_t = 1)]
    marked: u8,
    /// String to measure (omit when using --level).
    sigma: Option<String>,
    /// Work on the whole level of this k-length instead.
    #[arg(long, conflicts_with = "sigma")]
    level: Option<u64>,
    /// With --level: list the level in llex order instead of counting.
    #[arg(long, requires = "level")]
    enumerate: bool,
}

#[derive(Args)]
struct TablesArgs {
    /// Which table: "roots" or "conversion".
    #[arg(long)]
    which: String,
}

#[derive(Args)]
struct KcArgs {
    #[arg(long)]
    k: u32,
    /// JSON-lines request file: {"klen": <int>, "payload": "<bits>"}.
    requests: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Codebook JSON file.
    book: PathBuf,
    /// Optional request stream to cross-check lengths and payloads.
    #[arg(long)]
    requests: Option<PathBuf>,
    /// k to parse the request stream against (defaults to the book's k).
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Decimal parameter in (0, 1).
    p: String,
    #[arg(long, default_value = "0.0001")]
    tolerance: String,
    #[arg(long, default_value_t = 64)]
    k_max: u32,
}

#[derive(Subcommand)]
enum MachineCommand {
    /// Run the machine on an input; prints the output or "undefined".
    Decode {
        #[arg(long)]
        machine: PathBuf,
        input: String,
    },
    /// Minimum k-length of an input producing the string ("inf" if none).
    Complexity {
        #[arg(long)]
        machine: PathBuf,
        sigma: String,
    },
    /// Deficiency set rows and the certified measure bound.
    Deficiency {
        #[arg(long)]
        machine: PathBuf,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum IcmCommand {
    /// Check the exact sum condition; prints "true" or "false".
    Validate { file: PathBuf },
    /// Compile to a machine with K(s) <= F(s) + k for every assignment.
    Compile { file: PathBuf },
}

#[derive(Subcommand)]
enum LabCommand {
    /// Deterministic n-bit sample of lambda_j.
    Sample {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: u64,
    },
    /// Rate report CSV for one sample.
    Report {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful exits; everything else is
            // a usage error (exit 1, not clap's default 2, which this
            // tool reserves for budget violations).
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    if cli.precision < 32 {
        eprintln!("error: --precision must be at least 32");
        return ExitCode::from(EXIT_USAGE);
    }
    if cli.cap < 1 {
        eprintln!("error: --cap must be at least 1");
        return ExitCode::from(EXIT_USAGE);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_CAP)
        }
    }
}

enum Failure {
    Usage(anyhow::Error),
    Budget(String),
    Cap(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Length(args) => length(cli, args),
        Command::Tables(args) => {
            let csv = match args.which.as_str() {
                "roots" => formats::root_table_csv(cli.precision),
                "conversion" => formats::conversion_table_csv(cli.precision),
                other => {
                    return Err(anyhow!("unknown table {other:?}; use roots or conversion").into())
                }
            };
            emit(cli, &csv)?;
            Ok(())
        }
        Command::Kc(args) => kc(cli, args),
        Command::Verify(args) => verify(cli, args),
        Command::Classify(args) => classify(cli, args),
        Command::Machine(cmd) => machine(cli, cmd),
        Command::Icm(cmd) => icm(cli, cmd),
        Command::Lab(cmd) => lab_cmd(cli, cmd),
    }
}

/// Primary output goes to --output or stdout.
fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {path:?}")),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .context("writing stdout"),
    }
}

/// Bit strings print as raw 0/1 text; the empty string prints quoted so
/// it is visible.
fn display_bits(s: &BitString) -> String {
    if s.is_empty() {
        "\"\"".to_string()
    } else {
        s.to_string()
    }
}

fn parse_bits(text: &str) -> Result<BitString> {
    text.parse().map_err(|e| anyhow!("{e}"))
}

fn length(cli: &Cli, args: &LengthArgs) -> Result<(), Failure> {
    if args.marked > 1 {
        return Err(anyhow!("--marked must be 0 or 1").into());
    }
    if args.k < 1 {
        return Err(anyhow!("--k must be at least 1").into());
    }
    let spec = KLengthSpec::with_marked(args.k, args.marked);
    match (&args.sigma, args.level) {
        (Some(sigma), None) => {
            let s = parse_bits(sigma)?;
            emit(cli, &format!("{}\n", spec.k_length(&s)))?;
            Ok(())
        }
        (None, Some(level)) => {
            if args.enumerate {
                let strings = spec
                    .enumerate_level(level, cli.cap)
                    .map_err(|e| Failure::Cap(format!("level too large: {e}")))?;
                let mut out = String::new();
                for s in strings {
                    out.push_str(&display_bits(&s));
                    out.push('\n');
                }
                emit(cli, &out)?;
            } else {
                emit(cli, &format!("{}\n", spec.count_level(level)))?;
            }
            Ok(())
        }
        _ => Err(anyhow!("provide either a string or --level N").into()),
    }
}

fn kc(cli: &Cli, args: &KcArgs) -> Result<(), Failure> {
    if args.k < 1 {
        return Err(anyhow!("--k must be at least 1").into());
    }
    let text = fs::read_to_string(&args.requests)
        .with_context(|| format!("reading {:?}", args.requests))
        .map_err(Failure::Usage)?;
    let stream = formats::parse_request_stream(args.k, &text)?;
    let book = allocate_stream(&stream).map_err(|e| {
        Failure::Budget(format!(
            "budget exceeded at request index {} (k-length {})",
            e.index, e.requested_klen
        ))
    })?;
    emit(cli, &formats::render_codebook(&book))?;
    Ok(())
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<(), Failure> {
    let text = fs::read_to_string(&args.book)
        .with_context(|| format!("reading {:?}", args.book))
        .map_err(Failure::Usage)?;
    let book = formats::parse_codebook(&text)?;
    let report = match &args.requests {
        Some(path) => {
            let stream_text = fs::read_to_string(path)
                .with_context(|| format!("reading {path:?}"))
                .map_err(Failure::Usage)?;
            let stream =
                formats::parse_request_stream(args.k.unwrap_or_else(|| book.k()), &stream_text)?;
            book.verify_against(&stream)
        }
        None => book.verify(),
    };
    let mut out = String::new();
    out.push_str(&format!("entries: {}\n", book.len()));
    out.push_str(&format!(
        "prefix_free: {}\n",
        report.prefix_violations.is_empty()
    ));
    for (a, b) in &report.prefix_violations {
        out.push_str(&format!("violation: {} prefixes {}\n", a, b));
    }
    out.push_str(&format!("spent_consistent: {}\n", report.spent_consistent));
    out.push_str(&format!("within_budget: {}\n", report.within_budget));
    if let Some(matches) = report.stream_matches {
        out.push_str(&format!("matches_requests: {matches}\n"));
    }
    emit(cli, &out)?;
    if report.all_ok() {
        Ok(())
    } else {
        Err(Failure::Budget("verification failed".to_string()))
    }
}

fn classify(cli: &Cli, args: &ClassifyArgs) -> Result<(), Failure> {
    let p = parse_decimal(&args.p).ok_or_else(|| anyhow!("p must be a decimal number"))?;
    let tolerance = parse_decimal(&args.tolerance)
        .ok_or_else(|| anyhow!("tolerance must be a decimal number"))?;
    match classify_bernoulli(&p, &tolerance, args.k_max) {
        Ok(Some(k)) => emit(cli, &format!("{k}\n"))?,
        Ok(None) => emit(cli, "none\n")?,
        Err(ClassifyError::OutOfRange) => {
            return Err(anyhow!("p must lie strictly between 0 and 1").into())
        }
        Err(e @ ClassifyError::Ambiguous { .. }) => return Err(anyhow!("{e}").into()),
    }
    Ok(())
}

fn machine(cli: &Cli, cmd: &MachineCommand) -> Result<(), Failure> {
    match cmd {
        MachineCommand::Decode { machine, input } => {
            let book = load_book(machine)?;
            let input = parse_bits(input)?;
            match book.decode(&input) {
                Some((payload, _consumed)) => emit(cli, &format!("{}\n", display_bits(payload)))?,
                None => emit(cli, "undefined\n")?,
            }
            Ok(())
        }
        MachineCommand::Complexity { machine, sigma } => {
            let book = load_book(machine)?;
            let sigma = parse_bits(sigma)?;
            emit(cli, &format!("{}\n", book.k_complexity(&sigma)))?;
            Ok(())
        }
        MachineCommand::Deficiency { machine, j, n } => {
            if *j < 1 {
                return Err(anyhow!("--j must be at least 1").into());
            }
            let book = load_book(machine)?;
            let report = deficiency_set(&book, *j, *n);
            emit(cli, &formats::deficiency_csv(&report))?;
            eprintln!(
                "members: {}; measure bound holds: {}",
                report.members().count(),
                report.bound_holds
            );
            if report.bound_holds {
                Ok(())
            } else {
                Err(Failure::Budget("deficiency measure bound violated".into()))
            }
        }
    }
}

fn load_book(path: &PathBuf) -> Result<klen_core::CodeBook> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
    formats::parse_codebook(&text)
}

fn icm(cli: &Cli, cmd: &IcmCommand) -> Result<(), Failure> {
    match cmd {
        IcmCommand::Validate { file } => {
            let text = fs::read_to_string(file)
                .with_context(|| format!("reading {file:?}"))
                .map_err(Failure::Usage)?;
            let icm = formats::parse_icm(&text)?;
            emit(cli, &format!("{}\n", icm.validate()))?;
            Ok(())
        }
        IcmCommand::Compile { file } => {
            let text = fs::read_to_string(file)
                .with_context(|| format!("reading {file:?}"))
                .map_err(Failure::Usage)?;
            let icm = formats::parse_icm(&text)?;
            let machine = icm
                .compile()
                .map_err(|e| Failure::Budget(format!("compile failed: {e}")))?;
            emit(cli, &formats::render_codebook(&machine))?;
            Ok(())
        }
    }
}

fn lab_cmd(cli: &Cli, cmd: &LabCommand) -> Result<(), Failure> {
    match cmd {
        LabCommand::Sample { j, seed, n } => {
            if *j < 1 {
                return Err(anyhow!("--j must be at least 1").into());
            }
            let sample = lab::sample(*j, *seed, *n as usize);
            emit(cli, &format!("{}\n", display_bits(&sample)))?;
            Ok(())
        }
        LabCommand::Report { j, k, seed, n } => {
            if *j < 1 || *k < 1 {
                return Err(anyhow!("--j and --k must be at least 1").into());
            }
            if *n < 1 {
                return Err(anyhow!("--n must be at least 1").into());
            }
            let report = lab::rate_report(*j, *k, *seed, *n);
            emit(
                cli,
                &formats::rate_report_csv(std::slice::from_ref(&report)),
            )?;
            eprintln!("note: {}", lab::UPPER_BOUND_NOTE);
            Ok(())
        }
    }
}
