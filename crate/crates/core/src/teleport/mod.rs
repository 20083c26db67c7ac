//! The teleportation protocol.
//!
//! 1. Bell resource: `𝒯` over the `2N+1` pairs of the Bell block, applied to
//!    `|0…0⟩`.
//! 2. Alice applies `𝒯⁻¹` over `M` pairs of her measured block (her `M`
//!    Bell anyons nearest φ, then φ) and measures each of its pairs.
//! 3. The outcomes `a_1 … a_M` pick Bob's correction.
//! 4. Bob applies the correction; φ then sits on anyons `1..=M`.

mod correction;
mod lemma;
mod tangle;

pub use correction::{correction_word, outcome_string, table1, verify_table1, CorrectionPlan, TABLE1};
pub use lemma::{verify_lemma, LemmaCase, LemmaReport};
pub use tangle::{
    check_tangled_gate, prepare_bell, tangle, tangle_word, tangled_gate, verify_bell, Direction, GateCheck,
    TangleSpec,
};

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{self, qubit_count, BraidWord};
use crate::error::{Error, Result};
use crate::layout::Layout;
use crate::scalar::{Backend, Scalar};
use crate::state::{embed, inner, norm_sqr, project_pair, AnyonState, Sector, NORM_TOL};

/// Default fidelity tolerance for the float backend.
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// All `2^M` outcome strings.
    Exhaustive,
    /// This many seeded draws from the outcome distribution.
    Sample(usize),
}

#[derive(Clone, Debug)]
pub struct TeleportOptions {
    pub mode: Mode,
    pub seed: u64,
    /// Float tolerance on fidelities; the exact backend ignores it.
    pub tol: f64,
    /// Order in which Alice measures her pairs (1-based). Defaults to
    /// `1..=M`.
    pub measurement_order: Option<Vec<usize>>,
}

impl Default for TeleportOptions {
    fn default() -> Self {
        TeleportOptions { mode: Mode::Exhaustive, seed: 0, tol: DEFAULT_TOL, measurement_order: None }
    }
}

/// One outcome string and what Bob ended up with.
#[derive(Clone, Debug, Serialize)]
pub struct BranchRecord {
    pub outcomes: String,
    pub probability: f64,
    /// Exact probability in `a0 a1 a2 a3 / 2^k` form (exact backend).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probability_exact: Option<String>,
    /// Number of draws that landed here (sample mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    /// Bob-local correction, e.g. `"b0^2 b3^2"`.
    pub correction: String,
    pub uses_auxiliary: bool,
    /// The correction as applied, in global generator indices.
    pub applied: BraidWord,
    /// `|⟨φ|Bob⟩|`: the square root of `⟨φ|ρ_Bob|φ⟩`.
    pub fidelity: f64,
    pub passed: bool,
    /// Phase of `⟨φ ⊗ e_r|ψ⟩` for the first rest-index `r` with weight,
    /// as `[re, im]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phase: Option<[f64; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TeleportReport {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub anyons: usize,
    pub seed: u64,
    pub backend: Backend,
    pub mode: Mode,
    pub tolerance: f64,
    pub sector: Sector,
    pub measurement_order: Vec<usize>,
    /// `𝒯` on the Bell block.
    pub bell_word: BraidWord,
    /// Alice's `𝒯⁻¹`.
    pub alice_word: BraidWord,
    pub branches: Vec<BranchRecord>,
    pub probability_sum: f64,
    /// Exact sum of branch probabilities is 1 (exact backend, exhaustive).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probability_sum_exact: Option<bool>,
    pub all_pass: bool,
    pub timing: Timing,
}

impl TeleportReport {
    pub fn branch(&self, outcomes: &str) -> Option<&BranchRecord> {
        self.branches.iter().find(|b| b.outcomes == outcomes)
    }

    /// The report as JSON with the timing sub-object removed.
    pub fn to_json_without_timing(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("timing");
        }
        v
    }
}

/// Pre-correction state of one branch, unnormalized.
struct Leaf<S> {
    outcomes: Vec<u8>,
    amps: Vec<S>,
    count: Option<usize>,
}

struct Setup<'a, S> {
    layout: Layout,
    phi: &'a AnyonState<S>,
    order: Vec<usize>,
    tol: f64,
}

/// Runs the protocol for `phi` through the Bell resource of `4n+2` anyons.
pub fn run_teleport<S: Scalar>(phi: &AnyonState<S>, n: usize, opts: &TeleportOptions) -> Result<TeleportReport> {
    let start = Instant::now();
    phi.validate(NORM_TOL)?;
    let layout = Layout::new(phi.anyons(), n)?;
    let m = layout.m();
    let k = layout.total_anyons();

    let order = match &opts.measurement_order {
        Some(o) => {
            let mut sorted = o.clone();
            sorted.sort_unstable();
            if sorted != (1..=m).collect::<Vec<_>>() {
                return Err(Error::InvalidLabels(format!("measurement order {o:?} is not a permutation of 1..={m}")));
            }
            o.clone()
        }
        None => (1..=m).collect(),
    };

    let bell_word = tangle(k, layout.bell_pairs(), 0)?;
    let alice_word = TangleSpec { pairs: m, offset: layout.alice_block_start() - 1, direction: Direction::Undo }.word(k)?;
    let mut state = embed(phi, n)?;
    braid::apply_in_place(&bell_word, &mut state)?;
    braid::apply_in_place(&alice_word, &mut state)?;
    let amps = state.into_amplitudes();

    let setup = Setup { layout, phi, order, tol: opts.tol };
    let mut leaves = match opts.mode {
        Mode::Exhaustive => explore(&setup, amps, Vec::new())?,
        Mode::Sample(count) => sample(&setup, &amps, count, opts.seed)?,
    };
    leaves.sort_by(|a, b| a.outcomes.cmp(&b.outcomes));

    let branches = leaves.iter().map(|leaf| finish_branch(&setup, leaf)).collect::<Result<Vec<_>>>()?;
    let probability_sum = branches.iter().map(|b| b.probability).sum();
    let probability_sum_exact = (S::is_exact() && opts.mode == Mode::Exhaustive)
        .then(|| leaves.iter().fold(S::zero(), |acc, l| acc.add(&norm_sqr(&l.amps))).is_one());
    let all_pass = branches.iter().all(|b| b.passed) && probability_sum_exact.unwrap_or(true);

    Ok(TeleportReport {
        m,
        n,
        anyons: k,
        seed: opts.seed,
        backend: S::BACKEND,
        mode: opts.mode,
        tolerance: opts.tol,
        sector: phi.sector(),
        measurement_order: setup.order.clone(),
        bell_word,
        alice_word,
        branches,
        probability_sum,
        probability_sum_exact,
        all_pass,
        timing: Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1e3 },
    })
}

fn project<S: Scalar>(setup: &Setup<S>, amps: &[S], step: usize, outcome: u8) -> Result<Vec<S>> {
    let pair = setup.order[step];
    project_pair(amps, setup.layout.total_anyons(), setup.layout.alice_pair_generator(pair), outcome)
}

/// Depth-first over measurement steps, both children in parallel.
/// `outcomes` is indexed by measurement step.
fn explore<S: Scalar>(setup: &Setup<S>, amps: Vec<S>, outcomes: Vec<u8>) -> Result<Vec<Leaf<S>>> {
    let step = outcomes.len();
    if step == setup.layout.m() {
        return Ok(vec![Leaf { outcomes: by_pair(setup, &outcomes), amps, count: None }]);
    }
    let child = |a: u8| -> Result<Vec<Leaf<S>>> {
        let next = project(setup, &amps, step, a)?;
        let mut o = outcomes.clone();
        o.push(a);
        explore(setup, next, o)
    };
    let (zero, one) = rayon::join(|| child(0), || child(1));
    let mut out = zero?;
    out.extend(one?);
    Ok(out)
}

fn by_pair<S>(setup: &Setup<S>, by_step: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; by_step.len()];
    for (step, &a) in by_step.iter().enumerate() {
        out[setup.order[step] - 1] = a;
    }
    out
}

/// `count` draws, each measuring the pairs in order and choosing outcomes
/// with their conditional probabilities from `ChaCha8Rng` seeded by `seed`.
fn sample<S: Scalar>(setup: &Setup<S>, amps: &[S], count: usize, seed: u64) -> Result<Vec<Leaf<S>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits: std::collections::BTreeMap<Vec<u8>, (Vec<S>, usize)> = Default::default();
    for _ in 0..count {
        let mut cur = amps.to_vec();
        let mut outcomes = Vec::with_capacity(setup.layout.m());
        for step in 0..setup.layout.m() {
            let p_cur = norm_sqr(&cur).to_c64().re;
            let zero = project(setup, &cur, step, 0)?;
            let p0 = norm_sqr(&zero).to_c64().re / p_cur;
            let a = u8::from(rng.random::<f64>() >= p0);
            cur = if a == 0 { zero } else { project(setup, &cur, step, 1)? };
            outcomes.push(a);
        }
        let key = by_pair(setup, &outcomes);
        hits.entry(key).or_insert((cur, 0)).1 += 1;
    }
    Ok(hits.into_iter().map(|(outcomes, (amps, c))| Leaf { outcomes, amps, count: Some(c) }).collect())
}

fn finish_branch<S: Scalar>(setup: &Setup<S>, leaf: &Leaf<S>) -> Result<BranchRecord> {
    let layout = &setup.layout;
    let plan = correction_word(&leaf.outcomes)?;
    let applied = plan.global_word(layout)?;
    let mut amps = leaf.amps.clone();
    braid::apply_to_amplitudes(&applied, &mut amps)?;

    let probability = norm_sqr(&leaf.amps);
    let (fidelity, passed, phase) = bob_fidelity(setup, &amps, &probability);
    Ok(BranchRecord {
        outcomes: outcome_string(&leaf.outcomes),
        probability: probability.to_c64().re,
        probability_exact: S::is_exact().then(|| format!("{probability:?}")),
        count: leaf.count,
        correction: plan.to_string(),
        uses_auxiliary: plan.uses_auxiliary,
        applied,
        fidelity,
        passed,
        phase,
    })
}

/// Compares the leading `⌊M/2⌋` qubits (Bob's anyons `1..=M`) with φ.
///
/// Writes the unnormalized branch state as a matrix `A[bob][rest]`; then
/// `⟨φ|ρ_Bob|φ⟩ = ‖φ†A‖² / ‖A‖²`, which is 1 exactly when `A = φ ⊗ χ`.
fn bob_fidelity<S: Scalar>(setup: &Setup<S>, amps: &[S], weight: &S) -> (f64, bool, Option<[f64; 2]>) {
    if weight.is_zero() {
        return (0.0, false, None);
    }
    let total = qubit_count(setup.layout.total_anyons());
    let rest_bits = total - setup.layout.bob_register_qubits();
    let rest = 1usize << rest_bits;
    let phi = setup.phi.amplitudes();
    let projected: Vec<S> = (0..rest)
        .map(|r| {
            let column: Vec<S> = (0..phi.len()).map(|b| amps[(b << rest_bits) | r].clone()).collect();
            inner(phi, &column)
        })
        .collect();
    let overlap = norm_sqr(&projected);
    let ratio = overlap.to_c64().re / weight.to_c64().re;
    let fidelity = ratio.clamp(0.0, 1.0).sqrt();
    let passed = if S::is_exact() { overlap.close_to(weight, 0.0) } else { fidelity >= 1.0 - setup.tol };
    let phase = passed
        .then(|| projected.iter().find(|p| !p.is_zero()).map(|p| p.to_c64() / p.to_c64().norm()))
        .flatten()
        .map(|z| [z.re, z.im]);
    (fidelity, passed, phase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycScalar;
    use num_complex::Complex64;

    type C = CycScalar;

    #[test]
    fn zero_state_four_anyons() {
        let phi = AnyonState::<C>::basis(4, &[0, 0]).unwrap();
        let r = run_teleport(&phi, 2, &TeleportOptions::default()).unwrap();
        assert_eq!(r.branches.len(), 16);
        assert!(r.all_pass);
        assert_eq!(r.probability_sum_exact, Some(true));
        for b in &r.branches {
            assert_eq!(b.probability, 1.0 / 16.0);
        }
        assert_eq!(r.branches[0].correction, "I");
    }

    #[test]
    fn odd_three_anyons() {
        let phi = AnyonState::<C>::random(3, Sector::Sigma, 42).unwrap();
        let r = run_teleport(&phi, 1, &TeleportOptions::default()).unwrap();
        assert_eq!(r.branches.len(), 8);
        assert!(r.all_pass);
        assert!(r.branch("100").unwrap().applied.is_empty());
    }

    #[test]
    fn float_sector_one() {
        let phi = AnyonState::<Complex64>::random(4, Sector::Odd, 3).unwrap();
        let r = run_teleport(&phi, 2, &TeleportOptions::default()).unwrap();
        assert!(r.all_pass);
        for b in &r.branches {
            assert!((b.probability - 1.0 / 16.0).abs() < 1e-12);
            assert_eq!(b.uses_auxiliary, b.outcomes.bytes().filter(|&c| c == b'1').count() % 2 == 1);
        }
    }

    #[test]
    fn rejects_mixed_sector_and_oversized() {
        let h = C::inv_sqrt2();
        let bad = AnyonState::from_parts_unchecked(4, Sector::Even, vec![h.clone(), h, C::zero(), C::zero()]);
        assert!(matches!(run_teleport(&bad, 2, &TeleportOptions::default()), Err(Error::Superselection(_))));
        let phi = AnyonState::<C>::basis(5, &[0, 0]).unwrap();
        assert!(matches!(run_teleport(&phi, 1, &TeleportOptions::default()), Err(Error::StateTooLarge { .. })));
    }

    #[test]
    fn sampling_is_seeded() {
        let phi = AnyonState::<Complex64>::random(3, Sector::Sigma, 1).unwrap();
        let opts = TeleportOptions { mode: Mode::Sample(50), seed: 9, ..Default::default() };
        let a = run_teleport(&phi, 1, &opts).unwrap();
        let b = run_teleport(&phi, 1, &opts).unwrap();
        assert_eq!(a.to_json_without_timing(), b.to_json_without_timing());
        assert_eq!(a.branches.iter().map(|b| b.count.unwrap()).sum::<usize>(), 50);
        assert!(a.all_pass);
    }

    #[test]
    fn bad_measurement_order() {
        let phi = AnyonState::<C>::basis(2, &[0]).unwrap();
        let opts = TeleportOptions { measurement_order: Some(vec![1, 1]), ..Default::default() };
        assert!(run_teleport(&phi, 1, &opts).is_err());
    }
}
