//! `bcut`: command-line front end for the B1-cut pipeline.

mod commands;
mod drop;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use toric_bcut::{Error, Mode, OracleConfig};

#[derive(Parser)]
#[command(name = "bcut", version, about = "Newton polyhedra, B1-facet cuts and weighted blow-up certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Input {
    /// Polynomial, e.g. "x1^2 + x2*x3".
    #[arg(long)]
    poly: String,
    /// Number of variables.
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct DropArgs {
    /// Facets to drop: ids "0,2", normals "(4,1,5);(1,0,1)", "auto" or "none".
    #[arg(long)]
    drop: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Consistent)]
    mode: ModeArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Consistent,
    Compatible,
    General,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Consistent => Mode::Consistent,
            ModeArg::Compatible => Mode::Compatible,
            ModeArg::General => Mode::General,
        }
    }
}

#[derive(Args)]
struct OracleArgs {
    /// Prime for the finite-field oracle; repeat for several.
    #[arg(long = "prime")]
    primes: Vec<u64>,
    /// Maximum torus points searched per prime.
    #[arg(long, default_value_t = OracleConfig::default().budget)]
    budget: u64,
    /// Shuffles the order in which primes are tried.
    #[arg(long)]
    seed: Option<u64>,
}

impl OracleArgs {
    fn config(&self) -> OracleConfig {
        let mut c = OracleConfig { budget: self.budget, seed: self.seed, ..OracleConfig::default() };
        if !self.primes.is_empty() {
            c.primes = self.primes.clone();
        }
        c
    }
}

#[derive(Subcommand)]
enum Command {
    /// Newton polyhedron, normal fan and facet table.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// B1 certificates, slope classes and drop decisions.
    B1 {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        drop: DropArgs,
    },
    /// Cut polyhedron, its fan and the old/new table.
    Bcut {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        drop: DropArgs,
    },
    /// Cox presentation, proper transform and canonical multiplicities.
    Blowup {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        drop: DropArgs,
    },
    /// Normal-crossings certificate above the origin.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        drop: DropArgs,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Candidate, reduced and removable poles.
    Poles {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        drop: DropArgs,
    },
    /// Topological zeta function from a strata file.
    Ztop {
        #[arg(long)]
        strata: PathBuf,
    },
}

pub enum CliError {
    Input(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    /// Exit code 2 for malformed input, 1 for failures of the computation.
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Lib(e) => match e {
                Error::BudgetExceeded { .. }
                | Error::NoUsablePrime
                | Error::PrimeDividesDenominator(_)
                | Error::NegativeExponent { .. }
                | Error::Overflow(_)
                | Error::Invariant(_) => 1,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Lib(e) => e.to_string(),
        }
    }
}

/// A finished run: the JSON report, its text rendering and whether it succeeded.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Analyze { input } => commands::analyze(&input.poly, input.n),
        Command::B1 { input, drop } => commands::b1(&input.poly, input.n, drop.drop.as_deref(), drop.mode.into()),
        Command::Bcut { input, drop } => commands::bcut(&input.poly, input.n, drop.drop.as_deref(), drop.mode.into()),
        Command::Blowup { input, drop } => {
            commands::blowup(&input.poly, input.n, drop.drop.as_deref(), drop.mode.into())
        }
        Command::Verify { input, drop, oracle } => {
            commands::verify(&input.poly, input.n, drop.drop.as_deref(), drop.mode.into(), &oracle.config())
        }
        Command::Poles { input, drop } => commands::poles(&input.poly, input.n, drop.drop.as_deref(), drop.mode.into()),
        Command::Ztop { strata } => commands::ztop(strata),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable")),
                Format::Text => print!("{}", report.text),
            }
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(e) => {
            let code = e.code();
            match cli.format {
                Format::Json => {
                    let v = json!({ "error": { "exitCode": code, "message": e.message() } });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
                Format::Text => {}
            }
            eprintln!("bcut: {}", e.message());
            ExitCode::from(code)
        }
    }
}
