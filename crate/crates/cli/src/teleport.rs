use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use ising_core::state::AnyonState;
use ising_core::teleport::{run_teleport, Mode, TeleportOptions, TeleportReport, DEFAULT_TOL};
use ising_core::{Backend, Complex64, CycScalar, Layout, Scalar, StateFile};

use crate::{default_sector, emit, parse_sector, BackendArg, CliResult, Failure, OutputArgs};

/// Registers up to this many anyons default to exact arithmetic.
const EXACT_DEFAULT_MAX_ANYONS: usize = 16;
/// Exhaustive enumeration is the default up to this many teleported anyons.
const EXHAUSTIVE_DEFAULT_MAX_M: usize = 12;
const DEFAULT_SAMPLES: usize = 1000;

#[derive(Args, Debug)]
pub struct TeleportArgs {
    /// Number of anyons to teleport. Optional when --state is given.
    #[arg(long)]
    m: Option<usize>,
    /// Bell resource size: the resource has 4N+2 anyons. Needs M <= 2N+1.
    #[arg(long)]
    n: usize,
    /// Enumerate all 2^M outcome branches.
    #[arg(long, conflicts_with = "sample")]
    exhaustive: bool,
    /// Draw this many outcome strings instead.
    #[arg(long)]
    sample: Option<usize>,
    /// exact or float. Defaults to exact when M+4N+2 <= 16.
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
    /// Seed for the random input state and for sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Input state file. A random state is used when omitted.
    #[arg(long)]
    state: Option<PathBuf>,
    /// Sector of the random input state: 0, 1 or sigma.
    #[arg(long, conflicts_with = "state")]
    sector: Option<String>,
    /// Fidelity tolerance for the float backend.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

pub fn run(args: TeleportArgs) -> CliResult {
    if !(args.tol > 0.0 && args.tol < 1.0) {
        return Err(Failure::Config(format!("tolerance {} must lie in (0, 1)", args.tol)));
    }
    let file = args.state.as_deref().map(StateFile::read).transpose()?;
    let m = match (args.m, &file) {
        (Some(m), Some(f)) if m != f.anyons => {
            return Err(Failure::Config(format!("--m {m} but the state file holds {} anyons", f.anyons)))
        }
        (Some(m), _) => m,
        (None, Some(f)) => f.anyons,
        (None, None) => return Err(Failure::Config("--m is required without --state".into())),
    };
    let layout = Layout::new(m, args.n)?;
    let k = layout.total_anyons();

    let backend = match (args.backend, &file) {
        (Some(b), _) => Backend::from(b),
        (None, Some(f)) if f.cyclotomic.is_none() => Backend::Float,
        (None, _) if k <= EXACT_DEFAULT_MAX_ANYONS => Backend::Exact,
        (None, _) => Backend::Float,
    };
    let mode = match (args.exhaustive, args.sample) {
        (_, Some(0)) => return Err(Failure::Config("--sample needs at least one draw".into())),
        (_, Some(count)) => Mode::Sample(count),
        (true, None) => Mode::Exhaustive,
        (false, None) if m <= EXHAUSTIVE_DEFAULT_MAX_M => Mode::Exhaustive,
        (false, None) => Mode::Sample(DEFAULT_SAMPLES),
    };
    let sector = match &args.sector {
        Some(s) => parse_sector(s)?,
        None => default_sector(m),
    };
    let opts = TeleportOptions { mode, seed: args.seed, tol: args.tol, measurement_order: None };

    let report = match backend {
        Backend::Exact => {
            let phi = match &file {
                Some(f) => f.to_exact()?,
                None => AnyonState::<CycScalar>::random(m, sector, args.seed)?,
            };
            teleport_with(&phi, args.n, &opts)?
        }
        Backend::Float => {
            let phi = match &file {
                Some(f) => f.to_float()?,
                None => AnyonState::<Complex64>::random(m, sector, args.seed)?,
            };
            teleport_with(&phi, args.n, &opts)?
        }
    };
    emit(&args.output, &report, &summary(&report))?;
    if report.all_pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn teleport_with<S: Scalar>(phi: &AnyonState<S>, n: usize, opts: &TeleportOptions) -> Result<TeleportReport, Failure> {
    Ok(run_teleport(phi, n, opts)?)
}

fn summary(r: &TeleportReport) -> String {
    let mut s = String::new();
    let mode = match r.mode {
        Mode::Exhaustive => "exhaustive".to_string(),
        Mode::Sample(c) => format!("{c} samples"),
    };
    let _ = writeln!(s, "teleport M={} N={} K={} backend={} mode={mode} seed={}", r.m, r.n, r.anyons, r.backend, r.seed);
    for b in &r.branches {
        let count = b.count.map(|c| format!(" n={c}")).unwrap_or_default();
        let _ = writeln!(
            s,
            "  {}  p={:.6}{count}  G={:<24} F={:.12}  {}",
            b.outcomes,
            b.probability,
            b.correction,
            b.fidelity,
            if b.passed { "ok" } else { "FAIL" }
        );
    }
    let passed = r.branches.iter().filter(|b| b.passed).count();
    let _ = writeln!(
        s,
        "{}/{} branches pass, probability sum {:.12}: {}",
        passed,
        r.branches.len(),
        r.probability_sum,
        if r.all_pass { "PASS" } else { "FAIL" }
    );
    s
}
