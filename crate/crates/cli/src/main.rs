//! `ising-teleport`: run anyonic teleportation and check the braid
//! representation from the command line.
//!
//! Exit codes: 0 when everything passes, 1 when a verification fails, 2 on
//! usage or configuration errors.

mod teleport;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ising_core::state::{AnyonState, Sector};
use ising_core::{Backend, Complex64, CycScalar, StateFile};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "ising-teleport", version, about = "Ising anyon teleportation simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Teleport a state of M anyons through a Bell resource of 4N+2 anyons.
    Teleport(teleport::TeleportArgs),
    /// Check braid-representation identities.
    Verify(verify::VerifyArgs),
    /// Write a state file (random or basis state).
    State(StateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

/// Options shared by every command that writes a report.
#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write the JSON report here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print the JSON report on stdout instead of the summary.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Args, Debug)]
struct StateArgs {
    /// Number of anyons.
    #[arg(long)]
    m: usize,
    /// Sector: 0, 1 or sigma. Defaults to 0 for even M and sigma for odd M.
    #[arg(long)]
    sector: Option<String>,
    /// Basis labels a_1..a_n (e.g. 0110) instead of a random state.
    #[arg(long, conflicts_with = "sector")]
    basis: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
    backend: BackendArg,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure modes mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    /// Exit 1.
    Verification,
    /// Exit 2.
    Config(String),
}

impl From<ising_core::Error> for Failure {
    fn from(e: ising_core::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

pub type CliResult = Result<(), Failure>;

pub fn parse_sector(text: &str) -> Result<Sector, Failure> {
    text.parse().map_err(|e: ising_core::Error| Failure::Config(e.to_string()))
}

pub fn default_sector(m: usize) -> Sector {
    if m % 2 == 1 {
        Sector::Sigma
    } else {
        Sector::Even
    }
}

/// Writes `report` to `--out` and prints either `summary` or the JSON.
pub fn emit<T: Serialize>(out: &OutputArgs, report: &T, summary: &str) -> CliResult {
    let json = serde_json::to_string_pretty(report).map_err(|e| Failure::Config(e.to_string()))? + "\n";
    if let Some(path) = &out.out {
        write_file(path, &json)?;
    }
    if out.json {
        print!("{json}");
    } else {
        print!("{summary}");
    }
    Ok(())
}

pub fn write_file(path: &Path, text: &str) -> CliResult {
    std::fs::write(path, text).map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))
}

fn cmd_state(args: StateArgs) -> CliResult {
    let file = match (&args.basis, args.backend) {
        (Some(labels), backend) => {
            let labels: Vec<u8> = labels
                .chars()
                .map(|c| c.to_digit(2).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| Failure::Config(format!("basis labels `{labels}` must be 0s and 1s")))?;
            let st = AnyonState::<CycScalar>::basis(args.m, &labels)?;
            match backend {
                BackendArg::Exact => StateFile::from_exact(&st),
                BackendArg::Float => StateFile::from_float(&st.to_float()),
            }
        }
        (None, backend) => {
            let sector = match &args.sector {
                Some(s) => parse_sector(s)?,
                None => default_sector(args.m),
            };
            match backend {
                BackendArg::Exact => StateFile::from_exact(&AnyonState::<CycScalar>::random(args.m, sector, args.seed)?),
                BackendArg::Float => StateFile::from_float(&AnyonState::<Complex64>::random(args.m, sector, args.seed)?),
            }
        }
    };
    let json = serde_json::to_string_pretty(&file).map_err(|e| Failure::Config(e.to_string()))? + "\n";
    match &args.out {
        Some(path) => write_file(path, &json),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Teleport(a) => teleport::run(a),
        Command::Verify(a) => verify::run(a),
        Command::State(a) => cmd_state(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
