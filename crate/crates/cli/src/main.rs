//! `minterp`: minimal monomial interpolating bases from the command line.

mod commands;
mod problem_file;

use std::fmt;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minterp_core::{ConditionTag, Error};

use crate::problem_file::{Overrides, ProblemFile};

#[derive(Debug, Parser)]
#[command(
    name = "minterp",
    version,
    about = "Minimal monomial bases for multivariate interpolation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Args)]
struct ProblemArgs {
    /// Problem file (JSON), or `-` for stdin.
    file: String,

    /// Override the file's order kind: lex, grlex or grevlex.
    #[arg(long)]
    order: Option<String>,

    /// Override the variable precedence, most significant first (e.g. `x,y,z`).
    #[arg(long, value_delimiter = ',')]
    precedence: Option<Vec<String>>,

    /// Initial truncation degree for graded orders (defaults to the proven bound, n - 1 for D-invariant conditions).
    #[arg(long)]
    cap: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the minimal interpolating basis.
    Basis(ProblemArgs),
    /// Solve for the interpolant using the file's `values`.
    Interpolate(ProblemArgs),
    /// Test whether the given monomials form an interpolating basis.
    Verify {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Monomials, separated by spaces or commas (e.g. "1 x y^2").
        #[arg(required = true, num_args = 1..)]
        monomials: Vec<String>,
    },
    /// Compare the engine against the independent greedy oracle.
    Check(ProblemArgs),
    /// Emit a random problem file.
    Generate(GenerateArgs),
    /// Time the engine against the greedy oracle on random problems.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Lagrange,
    Hermite,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// RNG seed; a fresh one is drawn (and printed to stderr) when omitted.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "lagrange")]
    kind: Kind,
    /// Number of variables (random in 1..=3 when omitted).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
    dim: Option<u8>,
    /// Number of conditions (random in 1..=8 when omitted).
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..=64))]
    conditions: Option<u16>,
    /// Include random data values.
    #[arg(long)]
    values: bool,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random problems per kind.
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Maximum number of conditions.
    #[arg(long, default_value_t = 8)]
    max_conditions: usize,
}

/// A failed command, classified by exit code.
#[derive(Debug)]
pub struct CliError {
    pub exit: u8,
    pub kind: &'static str,
    pub message: String,
    pub tag: Option<ConditionTag>,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            exit: 1,
            kind: "InputError",
            message: message.into(),
            tag: None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({ "kind": self.kind, "message": self.message });
        if let Some(tag) = self.tag {
            v["site"] = tag.site.into();
            v["condition"] = tag.condition.into();
        }
        serde_json::json!({ "error": v })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::DependentConditions { tag } => CliError {
                exit: 2,
                kind: "DependentConditions",
                message,
                tag: Some(tag),
            },
            Error::SingularBasis => CliError {
                exit: 2,
                kind: "SingularBasis",
                message,
                tag: None,
            },
            Error::NoBasisInPool => CliError {
                exit: 2,
                kind: "NoBasisInPool",
                message,
                tag: None,
            },
            _ => CliError::input(message),
        }
    }
}

/// What a command prints on success.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub exit: u8,
}

fn load(args: &ProblemArgs) -> Result<ProblemFile, CliError> {
    let text = if args.file == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&args.file).map_err(|e| CliError::input(format!("{}: {e}", args.file)))?
    };
    ProblemFile::from_json(&text)
}

fn overrides(args: &ProblemArgs) -> Overrides {
    Overrides {
        order: args.order.clone(),
        precedence: args.precedence.clone(),
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Basis(a) => commands::basis(&load(a)?, &overrides(a), a.cap),
        Command::Interpolate(a) => commands::interpolate(&load(a)?, &overrides(a), a.cap),
        Command::Verify { problem: a, monomials } => commands::verify(&load(a)?, &overrides(a), monomials),
        Command::Check(a) => commands::check(&load(a)?, &overrides(a), a.cap),
        Command::Generate(g) => {
            let seed = g.seed.unwrap_or_else(rand::random);
            eprintln!("seed: {seed}");
            let kind = match g.kind {
                Kind::Lagrange => minterp_core::instances::InstanceKind::Lagrange,
                Kind::Hermite => minterp_core::instances::InstanceKind::Hermite,
            };
            commands::generate(
                seed,
                kind,
                g.dim.map(usize::from),
                g.conditions.map(usize::from),
                g.values,
            )
        }
        Command::Bench(b) => commands::bench(b.seed, b.count, b.max_conditions),
    }
}

fn main() -> ExitCode {
    // Usage errors are input errors (exit 1); exit 2 is reserved for dependence.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("JSON values serialize")
                );
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.exit)
        }
        Err(e) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&e.to_json()).expect("JSON values serialize")
                );
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit)
        }
    }
}
