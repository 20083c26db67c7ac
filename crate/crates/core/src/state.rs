//! State vectors over the anyonic computational basis.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::{self, qubit_count, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::layout::Layout;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Default tolerance on `‖ψ‖² = 1` for float states.
pub const NORM_TOL: f64 = 1e-12;

/// Total charge of a register: parity 0/1 for an even number of anyons,
/// `σ` for an odd number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    Even,
    Odd,
    Sigma,
}

impl Sector {
    pub fn from_parity(bit: usize) -> Sector {
        if bit % 2 == 0 {
            Sector::Even
        } else {
            Sector::Odd
        }
    }

    /// The parity bit, `None` for `σ`.
    pub fn parity(self) -> Option<usize> {
        match self {
            Sector::Even => Some(0),
            Sector::Odd => Some(1),
            Sector::Sigma => None,
        }
    }

    pub fn is_compatible(self, anyons: usize) -> bool {
        (anyons % 2 == 1) == (self == Sector::Sigma)
    }

    /// Does basis index `idx` belong to this sector?
    pub fn contains(self, idx: usize) -> bool {
        match self.parity() {
            Some(p) => idx.count_ones() as usize % 2 == p,
            None => true,
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sector::Even => "0",
            Sector::Odd => "1",
            Sector::Sigma => "sigma",
        })
    }
}

impl FromStr for Sector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(Sector::Even),
            "1" => Ok(Sector::Odd),
            "sigma" | "σ" => Ok(Sector::Sigma),
            other => Err(Error::Parse(format!("unknown sector `{other}`"))),
        }
    }
}

impl Serialize for Sector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Sector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Amplitudes of `K` anyons over the `2^⌊K/2⌋` computational basis states.
#[derive(Clone, Debug, PartialEq)]
pub struct AnyonState<S> {
    anyons: usize,
    sector: Sector,
    amps: Vec<S>,
}

impl<S: Scalar> AnyonState<S> {
    /// Basis state `|a_1 … a_n; c⟩_K`.
    pub fn basis(anyons: usize, labels: &[u8]) -> Result<Self> {
        let n = qubit_count(anyons);
        if anyons == 0 {
            return Err(Error::InvalidLabels("a register needs at least one anyon".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidLabels(format!("{} labels for {} qubits", labels.len(), n)));
        }
        let mut idx = 0usize;
        for &l in labels {
            if l > 1 {
                return Err(Error::InvalidLabels(format!("label {l} is not 0 or 1")));
            }
            idx = (idx << 1) | l as usize;
        }
        Ok(Self::basis_index(anyons, idx))
    }

    /// Basis state from its big-endian index.
    pub fn basis_index(anyons: usize, idx: usize) -> Self {
        let n = qubit_count(anyons);
        assert!(idx < 1 << n, "basis index {idx} out of range");
        let mut amps = vec![S::zero(); 1 << n];
        amps[idx] = S::one();
        let sector = if anyons % 2 == 1 { Sector::Sigma } else { Sector::from_parity(idx.count_ones() as usize) };
        AnyonState { anyons, sector, amps }
    }

    /// Checked constructor.
    pub fn new(anyons: usize, sector: Sector, amps: Vec<S>) -> Result<Self> {
        let st = Self::from_parts_unchecked(anyons, sector, amps);
        st.validate(NORM_TOL)?;
        Ok(st)
    }

    /// Like [`AnyonState::new`], reading the sector off the support.
    pub fn with_inferred_sector(anyons: usize, amps: Vec<S>) -> Result<Self> {
        let sector = if anyons % 2 == 1 {
            Sector::Sigma
        } else {
            let idx = amps
                .iter()
                .position(|a| !a.is_zero())
                .ok_or(Error::NotNormalized(0.0))?;
            Sector::from_parity(idx.count_ones() as usize)
        };
        Self::new(anyons, sector, amps)
    }

    /// Skips every invariant check. [`AnyonState::validate`] reports what is
    /// wrong with such a state.
    pub fn from_parts_unchecked(anyons: usize, sector: Sector, amps: Vec<S>) -> Self {
        AnyonState { anyons, sector, amps }
    }

    /// Checks dimension, sector compatibility, sector support and norm.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let n = qubit_count(self.anyons);
        if self.anyons == 0 {
            return Err(Error::InvalidLabels("a register needs at least one anyon".into()));
        }
        if self.amps.len() != 1 << n {
            return Err(Error::DimensionMismatch { expected: 1 << n, found: self.amps.len() });
        }
        if !self.sector.is_compatible(self.anyons) {
            return Err(Error::IncompatibleSector { anyons: self.anyons, sector: self.sector.to_string() });
        }
        if let Some(idx) = self.amps.iter().enumerate().position(|(i, a)| !a.is_zero() && !self.sector.contains(i)) {
            return Err(Error::Superselection(format!(
                "basis state {idx:0width$b} has weight outside sector {}",
                self.sector,
                width = n.max(1)
            )));
        }
        let norm = self.norm_sqr();
        if !norm.close_to(&S::one(), tol) {
            return Err(Error::NotNormalized(norm.to_c64().re));
        }
        Ok(())
    }

    /// Seeded random state in `sector`.
    ///
    /// The float backend draws independent standard normal real and
    /// imaginary parts on the sector's support from `ChaCha8Rng` seeded with
    /// `seed`, then normalizes. The exact backend cannot represent such
    /// amplitudes; it starts from a random sector basis state and applies a
    /// random braid word of length `4K + 8` drawn from the same generator.
    pub fn random(anyons: usize, sector: Sector, seed: u64) -> Result<Self> {
        if anyons == 0 || !sector.is_compatible(anyons) {
            return Err(Error::IncompatibleSector { anyons, sector: sector.to_string() });
        }
        let n = qubit_count(anyons);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let support: Vec<usize> = (0..1usize << n).filter(|&i| sector.contains(i)).collect();
        if S::is_exact() {
            let start = support[rng.random_range(0..support.len())];
            let mut st = Self::basis_index(anyons, start);
            if anyons >= 2 {
                let letters: Vec<Letter> = (0..4 * anyons + 8)
                    .map(|_| {
                        let g = rng.random_range(1..anyons);
                        let p = if rng.random_bool(0.5) { 1 } else { -1 };
                        Letter::new(g, p)
                    })
                    .collect();
                let word = BraidWord::from_applied(anyons, letters)?;
                braid::apply_in_place(&word, &mut st)?;
            }
            return Ok(st);
        }
        let mut amps = vec![S::zero(); 1 << n];
        let mut total = 0.0;
        let mut raw = Vec::with_capacity(support.len());
        for &i in &support {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            total += re * re + im * im;
            raw.push((i, Complex64::new(re, im)));
        }
        let scale = 1.0 / total.sqrt();
        for (i, z) in raw {
            amps[i] = S::from_c64(z * scale).ok_or_else(|| Error::NotExact("random amplitude".into()))?;
        }
        Ok(AnyonState { anyons, sector, amps })
    }

    pub fn anyons(&self) -> usize {
        self.anyons
    }

    pub fn qubits(&self) -> usize {
        qubit_count(self.anyons)
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn amplitudes(&self) -> &[S] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [S] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<S> {
        self.amps
    }

    pub fn norm_sqr(&self) -> S {
        norm_sqr(&self.amps)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &AnyonState<S>) -> Result<S> {
        if self.anyons != other.anyons {
            return Err(Error::AnyonCountMismatch { expected: self.anyons, found: other.anyons });
        }
        Ok(inner(&self.amps, &other.amps))
    }

    pub fn scaled(&self, s: &S) -> AnyonState<S> {
        AnyonState { anyons: self.anyons, sector: self.sector, amps: self.amps.iter().map(|a| a.mul(s)).collect() }
    }

    /// Entry-wise comparison (exact for the exact backend).
    pub fn close_to(&self, other: &AnyonState<S>, tol: f64) -> bool {
        self.anyons == other.anyons
            && self.sector == other.sector
            && self.amps.iter().zip(&other.amps).all(|(a, b)| a.close_to(b, tol))
    }

    /// Float copy of this state.
    pub fn to_float(&self) -> AnyonState<Complex64> {
        AnyonState { anyons: self.anyons, sector: self.sector, amps: self.amps.iter().map(Scalar::to_c64).collect() }
    }
}

pub(crate) fn norm_sqr<S: Scalar>(amps: &[S]) -> S {
    amps.iter().filter(|a| !a.is_zero()).fold(S::zero(), |acc, a| acc.add(&a.norm_sqr()))
}

pub(crate) fn inner<S: Scalar>(u: &[S], v: &[S]) -> S {
    u.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(S::zero(), |acc, (a, b)| acc.add(&a.conj().mul(b)))
}

/// Places φ next to the all-zeros Bell register: the result is
/// `|0…0⟩_{4N+2} ⊗ |φ⟩` on `M + 4N + 2` anyons, before any braiding.
pub fn embed<S: Scalar>(phi: &AnyonState<S>, n: usize) -> Result<AnyonState<S>> {
    let layout = Layout::new(phi.anyons(), n)?;
    let total = layout.total_anyons();
    let mut amps = vec![S::zero(); 1 << qubit_count(total)];
    // Bell qubits are the high bits and all zero
    amps[..phi.amps.len()].clone_from_slice(&phi.amps);
    let sector = if total % 2 == 1 { Sector::Sigma } else { phi.sector };
    Ok(AnyonState { anyons: total, sector, amps })
}

/// One branch of a pair measurement.
#[derive(Clone, Debug)]
pub struct MeasurementRecord<S> {
    /// Generator index `j` of the measured pair `(j, j+1)`.
    pub pair: usize,
    pub outcome: u8,
    pub probability: S,
    /// Renormalized post-measurement state; `None` when the branch has
    /// probability zero.
    pub post_state: Option<AnyonState<S>>,
}

/// `(ψ + (-1)^a · b_j² ψ) / 2`, the unnormalized projection onto fusion
/// channel `a` of anyons `j, j+1`.
pub(crate) fn project_pair<S: Scalar>(amps: &[S], anyons: usize, j: usize, outcome: u8) -> Result<Vec<S>> {
    let n = qubit_count(anyons);
    let mut flipped = amps.to_vec();
    braid::monodromy::<S>(anyons, j)?.apply_in_place(&mut flipped, n)?;
    Ok(amps
        .iter()
        .zip(&flipped)
        .map(|(a, m)| if outcome == 0 { a.add(m).half() } else { a.sub(m).half() })
        .collect())
}

/// Measures the fusion channel of adjacent anyons `(j, j+1)`.
///
/// Channel 0 is the `+1` eigenspace of the monodromy `b_j²`, channel 1 the
/// `-1` eigenspace. Works the same for pairs inside one qubit (odd `j`) and
/// pairs straddling two qubits (even `j`).
pub fn measure_pair<S: Scalar>(state: &AnyonState<S>, j: usize) -> Result<[MeasurementRecord<S>; 2]> {
    let branch = |outcome: u8| -> Result<MeasurementRecord<S>> {
        let amps = project_pair(&state.amps, state.anyons, j, outcome)?;
        let probability = norm_sqr(&amps);
        let post_state = if probability.is_zero() {
            None
        } else {
            let s = probability
                .inv_sqrt_real()
                .ok_or_else(|| Error::NotExact(format!("1/sqrt of probability {}", probability.to_c64().re)))?;
            Some(AnyonState {
                anyons: state.anyons,
                sector: state.sector,
                amps: amps.iter().map(|a| a.mul(&s)).collect(),
            })
        };
        Ok(MeasurementRecord { pair: j, outcome, probability, post_state })
    };
    Ok([branch(0)?, branch(1)?])
}

/// Overlap of two states, modulo a global phase.
#[derive(Clone, Debug)]
pub struct PhaseFidelity<S> {
    /// `|⟨u|v⟩|`.
    pub fidelity: f64,
    /// `|⟨u|v⟩|²`, exact in the exact backend.
    pub overlap_sqr: S,
    /// Unit `λ` with `v = λ·u`, when the states agree up to phase.
    pub phase: Option<S>,
}

/// Float tolerance used when deciding whether two states agree up to phase.
pub const FIDELITY_TOL: f64 = 1e-10;

pub fn fidelity_up_to_phase<S: Scalar>(u: &AnyonState<S>, v: &AnyonState<S>) -> Result<PhaseFidelity<S>> {
    if u.anyons != v.anyons {
        return Err(Error::AnyonCountMismatch { expected: u.anyons, found: v.anyons });
    }
    if u.sector != v.sector {
        return Err(Error::Superselection(format!("comparing sector {} with sector {}", u.sector, v.sector)));
    }
    let overlap = inner(&u.amps, &v.amps);
    let overlap_sqr = overlap.norm_sqr();
    let fidelity = overlap_sqr.to_c64().re.max(0.0).sqrt();
    let phase = if overlap_sqr.close_to(&S::one(), FIDELITY_TOL) {
        overlap_sqr.inv_sqrt_real().map(|s| overlap.mul(&s)).filter(|lambda| u.scaled(lambda).close_to(v, FIDELITY_TOL))
    } else {
        None
    };
    Ok(PhaseFidelity { fidelity, overlap_sqr, phase })
}

/// Partial trace onto the listed qubits (1-based), in the order given.
///
/// This is the ordinary qubit partial trace in the computational basis.
pub fn reduced_density<S: Scalar>(state: &AnyonState<S>, keep: &[usize]) -> Result<Matrix<S>> {
    let n = state.qubits();
    for (i, &q) in keep.iter().enumerate() {
        if q == 0 || q > n {
            return Err(Error::QubitOutOfRange { qubit: q, qubits: n });
        }
        if keep[..i].contains(&q) {
            return Err(Error::InvalidLabels(format!("qubit {q} listed twice")));
        }
    }
    let k = keep.len();
    let rest: Vec<usize> = (1..=n).filter(|q| !keep.contains(q)).collect();
    let mut a = vec![vec![S::zero(); 1 << rest.len()]; 1 << k];
    for (idx, amp) in state.amps.iter().enumerate() {
        if amp.is_zero() {
            continue;
        }
        let pick = |qs: &[usize]| qs.iter().fold(0usize, |acc, &q| (acc << 1) | ((idx >> (n - q)) & 1));
        a[pick(keep)][pick(&rest)] = amp.clone();
    }
    let mut rho = Matrix::zeros(1 << k, 1 << k);
    for r in 0..1 << k {
        for c in 0..1 << k {
            rho.set(r, c, inner(&a[c], &a[r]));
        }
    }
    Ok(rho)
}
