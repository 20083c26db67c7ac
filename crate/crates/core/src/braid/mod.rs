//! Braid group representation on the anyonic computational basis.

mod gate;
pub mod verify;
mod word;

pub use gate::{cnot, generator, monodromy, parity_projector, qubit_count, u_cnot, GateOp, Sign};
pub use word::{BraidWord, Letter};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::state::AnyonState;

/// Applies `word` to a copy of `state`, rightmost letter first.
pub fn apply<S: Scalar>(word: &BraidWord, state: &AnyonState<S>) -> Result<AnyonState<S>> {
    let mut out = state.clone();
    apply_in_place(word, &mut out)?;
    Ok(out)
}

/// In-place variant of [`apply`]. The caller must hold the only reference.
///
/// Powers are applied literally: `b_j^p` is `|p|` applications of `b_j` or
/// of its adjoint.
pub fn apply_in_place<S: Scalar>(word: &BraidWord, state: &mut AnyonState<S>) -> Result<()> {
    if word.anyons() != state.anyons() {
        return Err(Error::AnyonCountMismatch { expected: state.anyons(), found: word.anyons() });
    }
    apply_to_amplitudes(word, state.amplitudes_mut())
}

pub(crate) fn apply_to_amplitudes<S: Scalar>(word: &BraidWord, amps: &mut [S]) -> Result<()> {
    let n = qubit_count(word.anyons());
    for letter in word.applied() {
        let g = generator::<S>(word.anyons(), letter.generator)?;
        let g = if letter.power < 0 { g.adjoint() } else { g };
        for _ in 0..letter.power.unsigned_abs() {
            g.apply_in_place(amps, n)?;
        }
    }
    Ok(())
}

/// Dense matrix of `b_index` on the full `2^⌊K/2⌋` space.
pub fn generator_matrix<S: Scalar>(anyons: usize, index: usize) -> Result<Matrix<S>> {
    generator::<S>(anyons, index)?.to_matrix(qubit_count(anyons))
}

/// Dense matrix of a whole braid word, built by pushing basis vectors
/// through the structured kernels.
pub fn word_matrix<S: Scalar>(word: &BraidWord) -> Result<Matrix<S>> {
    let dim = 1usize << qubit_count(word.anyons());
    let mut cols = Vec::with_capacity(dim);
    for c in 0..dim {
        let mut v = vec![S::zero(); dim];
        v[c] = S::one();
        apply_to_amplitudes(word, &mut v)?;
        cols.push(v);
    }
    Ok(Matrix::from_columns(cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycScalar;
    use crate::state::Sector;

    type C = CycScalar;

    #[test]
    fn empty_word_is_identity() {
        let s = AnyonState::<C>::random(6, Sector::Even, 5).unwrap();
        assert_eq!(apply(&BraidWord::identity(6), &s).unwrap(), s);
    }

    #[test]
    fn generator_then_inverse() {
        let s = AnyonState::<C>::random(7, Sector::Sigma, 9).unwrap();
        for j in 1..7 {
            let w = BraidWord::parse(7, &format!("b{j}^-1 b{j}")).unwrap();
            assert_eq!(apply(&w, &s).unwrap(), s);
        }
    }

    #[test]
    fn b1_squared_flips_sign_of_10() {
        let s = AnyonState::<C>::basis(4, &[1, 0]).unwrap();
        let w = BraidWord::parse(4, "b1^2").unwrap();
        assert_eq!(apply(&w, &s).unwrap(), s.scaled(&C::one().neg()));
    }

    #[test]
    fn mismatched_count_is_rejected() {
        let s = AnyonState::<C>::basis(4, &[0, 0]).unwrap();
        assert!(matches!(apply(&BraidWord::identity(6), &s), Err(Error::AnyonCountMismatch { .. })));
    }

    #[test]
    fn fourth_power_is_identity_but_not_assumed() {
        let w = BraidWord::parse(6, "b3^4").unwrap();
        assert!(word_matrix::<C>(&w).unwrap().is_identity(0.0));
        let w = BraidWord::parse(6, "b2^2").unwrap();
        assert!(!word_matrix::<C>(&w).unwrap().is_identity(0.0));
    }
}
