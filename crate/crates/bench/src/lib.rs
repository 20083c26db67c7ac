//! Workloads shared by the criterion benches.

use ising_core::state::{AnyonState, Sector};
use ising_core::{BraidWord, Letter, Result, Scalar};

/// `b_1 b_2 … b_{K-1}`: every generator once, so odd and even kernels are
/// both exercised.
pub fn sweep_word(anyons: usize) -> Result<BraidWord> {
    BraidWord::from_letters(anyons, (1..anyons).map(|j| Letter::new(j, 1)).collect())
}

/// Random state of `anyons` anyons in its natural sector.
pub fn random_state<S: Scalar>(anyons: usize, seed: u64) -> Result<AnyonState<S>> {
    let sector = if anyons % 2 == 1 { Sector::Sigma } else { Sector::Even };
    AnyonState::random(anyons, sector, seed)
}
