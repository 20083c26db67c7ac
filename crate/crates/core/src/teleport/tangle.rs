//! Tangled braiding words and the Bell resource.

use serde::Serialize;

use crate::braid::{self, qubit_count, BraidWord, Letter};
use crate::braid::verify::VerifyReport;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::state::{measure_pair, reduced_density, AnyonState};

/// Whether a tangle is being built (`𝒯`) or undone (`𝒯⁻¹`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Prepare,
    Undo,
}

/// `𝒯` or `𝒯⁻¹` over `pairs` adjacent pairs, the first of which sits on
/// anyons `offset+1, offset+2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TangleSpec {
    pub pairs: usize,
    pub offset: usize,
    pub direction: Direction,
}

impl TangleSpec {
    /// Anyons covered, 1-based inclusive.
    pub fn block(&self) -> (usize, usize) {
        (self.offset + 1, self.offset + 2 * self.pairs)
    }

    pub fn word(&self, anyons: usize) -> Result<BraidWord> {
        let (_, last) = self.block();
        if last > anyons {
            return Err(Error::GeneratorOutOfRange { index: last - 1, anyons });
        }
        let w = tangle(anyons, self.pairs, self.offset)?;
        Ok(match self.direction {
            Direction::Prepare => w,
            Direction::Undo => w.inverse(),
        })
    }
}

/// Letters of `T_k` in the order they act.
///
/// `T_k` walks anyon `2k-1` leftward to position `k` (`b_{2k-2}` down to
/// `b_k`), then anyon `2k` to position `k+1` (`b_{2k-1}` down to `b_{k+1}`).
/// All crossings are positive.
fn tangle_letters(k: usize, offset: usize) -> impl Iterator<Item = Letter> {
    let first = (k..=2 * k - 2).rev();
    let second = (k + 1..=2 * k - 1).rev();
    first.chain(second).map(move |g| Letter::new(g + offset, 1))
}

/// `T_k` shifted by `offset`, on `anyons` strands. Requires `k >= 2`.
pub fn tangle_word(anyons: usize, k: usize, offset: usize) -> Result<BraidWord> {
    if k < 2 {
        return Err(Error::InvalidLabels(format!("T_{k} is undefined (k >= 2)")));
    }
    BraidWord::from_applied(anyons, tangle_letters(k, offset))
}

/// `𝒯 = T_pairs ⋯ T_3 T_2` shifted by `offset`: `T_2` acts first. Empty
/// for fewer than two pairs.
pub fn tangle(anyons: usize, pairs: usize, offset: usize) -> Result<BraidWord> {
    BraidWord::from_applied(anyons, (2..=pairs).flat_map(|k| tangle_letters(k, offset)))
}

/// The Bell state of `4N+2` anyons: `𝒯` over `2N+1` pairs applied to
/// `|0…0;0⟩`.
pub fn prepare_bell<S: Scalar>(n: usize) -> Result<AnyonState<S>> {
    let k = 4 * n + 2;
    let zero = AnyonState::basis_index(k, 0);
    braid::apply(&tangle(k, 2 * n + 1, 0)?, &zero)
}

/// `(1/√2)[[1,0,0,-i],[0,i,1,0],[0,-i,1,0],[1,0,0,i]]`, the two-qubit gate
/// that `𝒯` implements on four anyons.
pub fn tangled_gate<S: Scalar>() -> Matrix<S> {
    let (o, z, i) = (S::one(), S::zero(), S::zeta_pow(2));
    let mi = i.neg();
    Matrix::from_rows(vec![
        vec![o.clone(), z.clone(), z.clone(), mi.clone()],
        vec![z.clone(), i.clone(), o.clone(), z.clone()],
        vec![z.clone(), mi, o.clone(), z.clone()],
        vec![o.clone(), z.clone(), z, i],
    ])
    .scale(&S::inv_sqrt2())
}

/// Result of comparing the four-anyon `𝒯` with [`tangled_gate`].
#[derive(Clone, Debug)]
pub struct GateCheck<S> {
    pub word: BraidWord,
    pub matrix: Matrix<S>,
    /// `λ` with `word = λ · gate`.
    pub phase: Option<S>,
}

pub fn check_tangled_gate<S: Scalar>(tol: f64) -> Result<GateCheck<S>> {
    let word = tangle(4, 2, 0)?;
    let matrix = braid::word_matrix::<S>(&word)?;
    let phase = matrix.phase_relative_to(&tangled_gate(), tol);
    Ok(GateCheck { word, matrix, phase })
}

/// Operational checks on the Bell state of `4N+2` anyons: undoing `𝒯`
/// gives `|0…0⟩`, the innermost pair (anyons `2N+1, 2N+2`) fuses to vacuum
/// with certainty, and every other pair's qubit is maximally mixed.
pub fn verify_bell<S: Scalar>(n: usize, tol: f64) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::StateTooLarge { m: 1, n });
    }
    let k = 4 * n + 2;
    let mut report = VerifyReport::new(format!("bell state N={n} (K={k})"));
    let word = tangle(k, 2 * n + 1, 0)?;
    let bell = prepare_bell::<S>(n)?;
    let back = braid::apply(&word.inverse(), &bell)?;
    let zero = AnyonState::<S>::basis_index(k, 0);
    report.push(
        "T^-1 T |0...0> = |0...0>",
        back.close_to(&zero, tol),
        if back.close_to(&zero, tol) { String::new() } else { "amplitudes differ".into() },
    );

    let inner = 2 * n + 1;
    let [r0, _] = measure_pair(&bell, inner)?;
    let ok = r0.probability.close_to(&S::one(), tol);
    report.push(
        format!("pair ({inner},{}) fuses to 0 with probability 1", inner + 1),
        ok,
        if ok { String::new() } else { format!("P(0) = {}", r0.probability.to_c64().re) },
    );

    let half = Matrix::<S>::identity(2).scale(&S::dyadic(1, 1));
    for q in (1..=qubit_count(k)).filter(|&q| q != n + 1) {
        let rho = reduced_density(&bell, &[q])?;
        let side = if q <= n { "Bob" } else { "Alice" };
        report.push_matrix_eq(format!("{side} qubit {q} reduced state = I/2"), &rho, &half, tol);
    }
    Ok(report)
}
