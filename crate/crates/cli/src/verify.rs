use clap::{Args, Subcommand};
use ising_core::braid::verify::{verify_braid_relations, verify_pauli_identities, Family, VerifyReport};
use ising_core::teleport::{check_tangled_gate, tangled_gate, verify_bell, verify_lemma, verify_table1, DEFAULT_TOL};
use ising_core::{Complex64, CycScalar, Scalar};
use serde::Serialize;

use crate::{emit, BackendArg, CliResult, Failure, OutputArgs};

/// Largest braid group checked with dense matrices, per backend.
const MAX_DENSE_EXACT: usize = 12;
const MAX_DENSE_FLOAT: usize = 16;
/// Largest Bell register (4N+2 anyons) checked, per backend.
const MAX_BELL_EXACT: usize = 14;
const MAX_BELL_FLOAT: usize = 22;

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(subcommand)]
    check: Check,
    #[arg(long, value_enum, default_value_t = BackendArg::Exact, global = true)]
    backend: BackendArg,
    /// Entrywise tolerance for the float backend.
    #[arg(long, default_value_t = DEFAULT_TOL, global = true)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand, Debug)]
enum Check {
    /// Teleportation of one qubit from four anyons, for each basis state.
    Lemma,
    /// Pauli identities of the n-qubit representation.
    Pauli {
        #[arg(long)]
        n: usize,
        /// odd (2n+1 anyons) or even (2n+2 anyons).
        #[arg(long)]
        family: Family,
    },
    /// Braid relations and unitarity of the K-anyon generators.
    BraidRelations {
        #[arg(long)]
        k: usize,
    },
    /// Correction table for four teleported anyons.
    Table1,
    /// Bell resource of 4N+2 anyons.
    Bell {
        #[arg(long)]
        n: usize,
    },
    /// Four-anyon tangle word against the two-qubit gate.
    Gate,
}

#[derive(Serialize)]
struct GateReport {
    word: String,
    phase: Option<String>,
    #[serde(flatten)]
    checks: VerifyReport,
}

pub fn run(args: VerifyArgs) -> CliResult {
    if !(args.tol >= 0.0 && args.tol < 1.0) {
        return Err(Failure::Config(format!("tolerance {} must lie in [0, 1)", args.tol)));
    }
    let exact = args.backend == BackendArg::Exact;
    let tol = if exact { 0.0 } else { args.tol };
    let pass = match args.check {
        Check::Lemma => {
            let report = if exact { verify_lemma::<CycScalar>(tol)? } else { verify_lemma::<Complex64>(tol)? };
            let summary = report.to_verify_report();
            let mut text = summary.to_string();
            for case in &report.cases {
                let phase = case.phase.clone().unwrap_or_else(|| "none".into());
                text += &format!("  a1a2={}{}  phase {phase}\n", case.labels[0], case.labels[1]);
            }
            text += &format!("  same phase for all inputs: {}\n", report.same_phase);
            emit(&args.output, &report, &text)?;
            report.all_pass()
        }
        Check::Pauli { n, family } => {
            check_size(family.anyons(n), exact, MAX_DENSE_EXACT, MAX_DENSE_FLOAT)?;
            let r = if exact {
                verify_pauli_identities::<CycScalar>(n, family, tol)?
            } else {
                verify_pauli_identities::<Complex64>(n, family, tol)?
            };
            show(&args.output, r)?
        }
        Check::BraidRelations { k } => {
            check_size(k, exact, MAX_DENSE_EXACT, MAX_DENSE_FLOAT)?;
            let r = if exact { verify_braid_relations::<CycScalar>(k, tol)? } else { verify_braid_relations::<Complex64>(k, tol)? };
            show(&args.output, r)?
        }
        Check::Table1 => show(&args.output, verify_table1())?,
        Check::Bell { n } => {
            check_size(4 * n + 2, exact, MAX_BELL_EXACT, MAX_BELL_FLOAT)?;
            let r = if exact { verify_bell::<CycScalar>(n, tol)? } else { verify_bell::<Complex64>(n, tol)? };
            show(&args.output, r)?
        }
        Check::Gate => {
            let r = if exact { gate_report::<CycScalar>(tol)? } else { gate_report::<Complex64>(tol)? };
            let text = format!("{}  word {}\n  phase {}\n", r.checks, r.word, r.phase.as_deref().unwrap_or("none"));
            emit(&args.output, &r, &text)?;
            r.checks.all_pass()
        }
    };
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn check_size(anyons: usize, exact: bool, max_exact: usize, max_float: usize) -> CliResult {
    let (max, name) = if exact { (max_exact, "exact") } else { (max_float, "float") };
    if anyons > max {
        return Err(Failure::Config(format!("{anyons} anyons exceeds the {name} backend limit of {max}")));
    }
    Ok(())
}

fn show(out: &OutputArgs, report: VerifyReport) -> Result<bool, Failure> {
    emit(out, &report, &report.to_string())?;
    Ok(report.all_pass())
}

fn gate_report<S: Scalar>(tol: f64) -> Result<GateReport, Failure> {
    let check = check_tangled_gate::<S>(tol)?;
    let mut checks = VerifyReport::new("tangled-gate");
    match &check.phase {
        Some(phase) => checks.push_matrix_eq("word = phase * gate", &check.matrix, &tangled_gate::<S>().scale(phase), tol),
        None => checks.push_matrix_eq("word = phase * gate", &check.matrix, &tangled_gate::<S>(), tol),
    }
    Ok(GateReport { word: check.word.to_string(), phase: check.phase.as_ref().map(|p| format!("{p:?}")), checks })
}
