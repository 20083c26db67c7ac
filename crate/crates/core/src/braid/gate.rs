//! Structured gates on the anyonic computational basis.
//!
//! A register of `K` anyons carries `n = ⌊K/2⌋` qubits; qubit `q` (1-based)
//! is the fusion channel of anyons `2q-1, 2q`. Basis indices are big-endian
//! bitstrings `a_1 a_2 … a_n`, so qubit `q` sits at bit `n - q`.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Sign of a parity projector `(I ± τ3^{⊗m})/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GateOp<S> {
    /// `diag(d0, d1)` on one qubit.
    Diag1q { qubit: usize, diag: [S; 2] },
    /// Dense 2×2 on one qubit.
    Block1q { qubit: usize, matrix: [[S; 2]; 2] },
    /// Dense 4×4 on qubits `qubit, qubit+1`, local basis `00, 01, 10, 11`.
    Block2q { qubit: usize, matrix: Box<[[S; 4]; 4]> },
    /// Global scalar.
    Scalar(S),
    /// `(I ± τ3^{⊗qubits})/2` on the whole register of `qubits` qubits.
    Parity { qubits: usize, sign: Sign },
}

/// Number of qubits for `anyons` anyons.
pub fn qubit_count(anyons: usize) -> usize {
    anyons / 2
}

#[inline]
fn bit(n: usize, qubit: usize) -> usize {
    1 << (n - qubit)
}

/// `Σ m_c · a_c`, skipping structural zeros.
#[inline]
fn dot<S: Scalar>(row: &[S], amps: &[&S]) -> S {
    let mut acc: Option<S> = None;
    for (m, a) in row.iter().zip(amps) {
        if m.is_zero() || a.is_zero() {
            continue;
        }
        let term = if m.is_one() { (*a).clone() } else { m.mul(a) };
        acc = Some(match acc {
            Some(x) => x.add(&term),
            None => term,
        });
    }
    acc.unwrap_or_else(S::zero)
}

impl<S: Scalar> GateOp<S> {
    /// Highest qubit index the gate touches.
    fn max_qubit(&self) -> usize {
        match self {
            GateOp::Diag1q { qubit, .. } | GateOp::Block1q { qubit, .. } => *qubit,
            GateOp::Block2q { qubit, .. } => qubit + 1,
            GateOp::Scalar(_) => 0,
            GateOp::Parity { qubits, .. } => *qubits,
        }
    }

    /// Applies the gate to an amplitude vector over `n` qubits.
    pub fn apply_in_place(&self, amps: &mut [S], n: usize) -> Result<()> {
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch { expected: 1 << n, found: amps.len() });
        }
        let top = self.max_qubit();
        if top > n || matches!(self, GateOp::Diag1q { qubit: 0, .. } | GateOp::Block1q { qubit: 0, .. } | GateOp::Block2q { qubit: 0, .. }) {
            return Err(Error::QubitOutOfRange { qubit: top, qubits: n });
        }
        match self {
            GateOp::Diag1q { qubit, diag } => {
                let mask = bit(n, *qubit);
                for (idx, a) in amps.iter_mut().enumerate() {
                    let d = &diag[usize::from(idx & mask != 0)];
                    if !d.is_one() {
                        *a = a.mul(d);
                    }
                }
            }
            GateOp::Block1q { qubit, matrix } => {
                let mask = bit(n, *qubit);
                for i0 in 0..amps.len() {
                    if i0 & mask != 0 {
                        continue;
                    }
                    let i1 = i0 | mask;
                    let (a0, a1) = (amps[i0].clone(), amps[i1].clone());
                    amps[i0] = dot(&matrix[0], &[&a0, &a1]);
                    amps[i1] = dot(&matrix[1], &[&a0, &a1]);
                }
            }
            GateOp::Block2q { qubit, matrix } => {
                if *qubit + 1 > n {
                    return Err(Error::QubitOutOfRange { qubit: qubit + 1, qubits: n });
                }
                let hi = bit(n, *qubit);
                let lo = bit(n, *qubit + 1);
                for base in 0..amps.len() {
                    if base & (hi | lo) != 0 {
                        continue;
                    }
                    let idx = [base, base | lo, base | hi, base | hi | lo];
                    let old = idx.map(|i| amps[i].clone());
                    let refs = [&old[0], &old[1], &old[2], &old[3]];
                    for (r, &i) in idx.iter().enumerate() {
                        amps[i] = dot(&matrix[r], &refs);
                    }
                }
            }
            GateOp::Scalar(s) => {
                for a in amps.iter_mut() {
                    *a = a.mul(s);
                }
            }
            GateOp::Parity { qubits, sign } => {
                if *qubits != n {
                    return Err(Error::DimensionMismatch { expected: 1 << qubits, found: amps.len() });
                }
                let keep = match sign {
                    Sign::Plus => 0,
                    Sign::Minus => 1,
                };
                for (idx, a) in amps.iter_mut().enumerate() {
                    if idx.count_ones() % 2 != keep {
                        *a = S::zero();
                    }
                }
            }
        }
        Ok(())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> GateOp<S> {
        match self {
            GateOp::Diag1q { qubit, diag } => GateOp::Diag1q { qubit: *qubit, diag: [diag[0].conj(), diag[1].conj()] },
            GateOp::Block1q { qubit, matrix } => GateOp::Block1q {
                qubit: *qubit,
                matrix: [[matrix[0][0].conj(), matrix[1][0].conj()], [matrix[0][1].conj(), matrix[1][1].conj()]],
            },
            GateOp::Block2q { qubit, matrix } => {
                let m: [[S; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|c| matrix[c][r].conj()));
                GateOp::Block2q { qubit: *qubit, matrix: Box::new(m) }
            }
            GateOp::Scalar(s) => GateOp::Scalar(s.conj()),
            GateOp::Parity { .. } => self.clone(),
        }
    }

    /// Dense matrix on `n` qubits, built column by column through the kernel.
    pub fn to_matrix(&self, n: usize) -> Result<Matrix<S>> {
        let dim = 1usize << n;
        let mut cols = Vec::with_capacity(dim);
        for c in 0..dim {
            let mut v = vec![S::zero(); dim];
            v[c] = S::one();
            self.apply_in_place(&mut v, n)?;
            cols.push(v);
        }
        Ok(Matrix::from_columns(cols))
    }
}

fn check_index(anyons: usize, index: usize) -> Result<()> {
    if anyons < 2 || index == 0 || index >= anyons {
        return Err(Error::GeneratorOutOfRange { index, anyons });
    }
    Ok(())
}

fn two_qubit_braid<S: Scalar>() -> [[S; 4]; 4] {
    // (e^{iπ/4}/√2)·[[1,0,0,-i],[0,1,-i,0],[0,-i,1,0],[-i,0,0,1]]
    let p = S::zeta_pow(1).mul(&S::inv_sqrt2());
    let q = p.mul_zeta_pow(6);
    let z = S::zero();
    [
        [p.clone(), z.clone(), z.clone(), q.clone()],
        [z.clone(), p.clone(), q.clone(), z.clone()],
        [z.clone(), q.clone(), p.clone(), z.clone()],
        [q, z.clone(), z, p],
    ]
}

/// Braid generator `b_index` for `anyons` anyons in the computational basis.
///
/// Odd indices exchange the two anyons of one pair and are `diag(1, i)` on
/// that qubit. Even indices exchange anyons of neighbouring pairs; for an odd
/// anyon count the last generator involves the unpaired anyon and acts on the
/// last qubit alone.
pub fn generator<S: Scalar>(anyons: usize, index: usize) -> Result<GateOp<S>> {
    check_index(anyons, index)?;
    if index % 2 == 1 {
        return Ok(GateOp::Diag1q { qubit: index.div_ceil(2), diag: [S::one(), S::zeta_pow(2)] });
    }
    let qubit = index / 2;
    if anyons % 2 == 1 && index == anyons - 1 {
        let p = S::zeta_pow(1).mul(&S::inv_sqrt2());
        let q = p.mul_zeta_pow(6);
        return Ok(GateOp::Block1q { qubit, matrix: [[p.clone(), q.clone()], [q, p]] });
    }
    Ok(GateOp::Block2q { qubit, matrix: Box::new(two_qubit_braid()) })
}

/// Closed form of `b_index²`: `τ3` on the pair's qubit for odd indices,
/// `τ1 ⊗ τ1` on the neighbouring qubits for even ones (`τ1` alone for the
/// generator next to the unpaired anyon).
pub fn monodromy<S: Scalar>(anyons: usize, index: usize) -> Result<GateOp<S>> {
    check_index(anyons, index)?;
    let (o, z) = (S::one(), S::zero());
    if index % 2 == 1 {
        return Ok(GateOp::Diag1q { qubit: index.div_ceil(2), diag: [o.clone(), o.neg()] });
    }
    let qubit = index / 2;
    if anyons % 2 == 1 && index == anyons - 1 {
        return Ok(GateOp::Block1q { qubit, matrix: [[z.clone(), o.clone()], [o, z]] });
    }
    let mut m: [[S; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| S::zero()));
    for r in 0..4 {
        m[r][3 - r] = S::one();
    }
    Ok(GateOp::Block2q { qubit, matrix: Box::new(m) })
}

/// `U_CN^{c,c+1}`: CNOT with control qubit `control` and target `control+1`.
pub fn cnot<S: Scalar>(control: usize) -> GateOp<S> {
    let mut m: [[S; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| S::zero()));
    m[0][0] = S::one();
    m[1][1] = S::one();
    m[2][3] = S::one();
    m[3][2] = S::one();
    GateOp::Block2q { qubit: control, matrix: Box::new(m) }
}

/// The chain `U_CN^{1,2} U_CN^{2,3} ⋯ U_CN^{n-1,n}` taking standard-basis
/// labels to computational-basis labels, returned in application order
/// (`U_CN^{n-1,n}` first).
pub fn u_cnot<S: Scalar>(n: usize) -> Vec<GateOp<S>> {
    (1..n).rev().map(cnot).collect()
}

/// `P± = (I ± τ3^{⊗(n+1)})/2` on the `n+1` qubits of `2n+2` anyons.
pub fn parity_projector<S: Scalar>(n: usize, sign: Sign) -> GateOp<S> {
    GateOp::Parity { qubits: n + 1, sign }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycScalar;

    type C = CycScalar;

    fn basis(n: usize, idx: usize) -> Vec<C> {
        let mut v = vec![C::zero(); 1 << n];
        v[idx] = C::one();
        v
    }

    #[test]
    fn b1_on_four_anyons_is_diag_1_1_i_i() {
        let m = generator::<C>(4, 1).unwrap().to_matrix(2).unwrap();
        let i = C::i();
        assert_eq!(m, Matrix::diagonal(&[C::one(), C::one(), i.clone(), i]));
    }

    #[test]
    fn b2_on_four_anyons_matches_block() {
        let m = generator::<C>(4, 2).unwrap().to_matrix(2).unwrap();
        let p = C::zeta().mul(&C::inv_sqrt2());
        let q = p.mul(&C::i().neg());
        assert_eq!(*m.get(0, 0), p);
        assert_eq!(*m.get(0, 3), q);
        assert_eq!(*m.get(1, 2), q);
        assert_eq!(*m.get(2, 1), q);
        assert!(m.get(0, 1).is_zero());
    }

    #[test]
    fn b2_on_three_anyons_is_single_qubit() {
        let g = generator::<C>(3, 2).unwrap();
        assert!(matches!(g, GateOp::Block1q { qubit: 1, .. }));
        let m = g.to_matrix(1).unwrap();
        let p = C::zeta().mul(&C::inv_sqrt2());
        assert_eq!(*m.get(1, 0), p.mul(&C::i().neg()));
    }

    #[test]
    fn out_of_range_indices() {
        assert!(generator::<C>(4, 0).is_err());
        assert!(generator::<C>(4, 4).is_err());
        assert!(monodromy::<C>(1, 1).is_err());
    }

    #[test]
    fn monodromy_examples() {
        let m = monodromy::<C>(4, 1).unwrap().to_matrix(2).unwrap();
        let o = C::one();
        assert_eq!(m, Matrix::diagonal(&[o.clone(), o.clone(), o.neg(), o.neg()]));
        let xx = monodromy::<C>(4, 2).unwrap().to_matrix(2).unwrap();
        assert_eq!(*xx.get(0, 3), C::one());
        assert!(xx.matmul(&xx).is_identity(0.0));
    }

    #[test]
    fn monodromy_equals_literal_square() {
        for k in 2..=12 {
            let n = qubit_count(k);
            for j in 1..k {
                let g = generator::<C>(k, j).unwrap();
                let mut lit = Vec::new();
                let mut closed = Vec::new();
                for c in 0..(1 << n) {
                    let mut v = basis(n, c);
                    g.apply_in_place(&mut v, n).unwrap();
                    g.apply_in_place(&mut v, n).unwrap();
                    lit.push(v);
                    let mut w = basis(n, c);
                    monodromy::<C>(k, j).unwrap().apply_in_place(&mut w, n).unwrap();
                    closed.push(w);
                }
                assert_eq!(lit, closed, "K={k} j={j}");
            }
        }
    }

    #[test]
    fn u_cnot_maps_standard_labels() {
        // |1̄0̄⟩ -> |11⟩, |0̄0̄⟩ -> |00⟩, |1̄1̄⟩ -> |10⟩
        for (from, to) in [(0b10, 0b11), (0b00, 0b00), (0b11, 0b10), (0b01, 0b01)] {
            let mut v = basis(2, from);
            for g in u_cnot::<C>(2) {
                g.apply_in_place(&mut v, 2).unwrap();
            }
            assert_eq!(v, basis(2, to));
        }
        assert!(u_cnot::<C>(1).is_empty());
    }

    #[test]
    fn u_cnot_is_prefix_xor() {
        // a_k = ā_k ⊕ ā_{k-1}
        let n = 4;
        for bar in 0..(1usize << n) {
            let mut v = basis(n, bar);
            for g in u_cnot::<C>(n) {
                g.apply_in_place(&mut v, n).unwrap();
            }
            let expect = bar ^ (bar >> 1);
            assert_eq!(v, basis(n, expect), "bar={bar:04b}");
        }
    }

    #[test]
    fn parity_projectors() {
        let p = parity_projector::<C>(1, Sign::Plus).to_matrix(2).unwrap();
        let (o, z) = (C::one(), C::zero());
        assert_eq!(p, Matrix::diagonal(&[o.clone(), z.clone(), z, o]));
        assert_eq!(p.matmul(&p), p);
        let m = parity_projector::<C>(1, Sign::Minus).to_matrix(2).unwrap();
        assert!(p.add(&m).is_identity(0.0));
        let b2 = generator::<C>(4, 2).unwrap().to_matrix(2).unwrap();
        assert!(p.commutes_with(&b2, 0.0));
    }

    #[test]
    fn adjoint_inverts_generators() {
        for k in 2..=9 {
            let n = qubit_count(k);
            for j in 1..k {
                let g = generator::<C>(k, j).unwrap();
                let prod = g.to_matrix(n).unwrap().matmul(&g.adjoint().to_matrix(n).unwrap());
                assert!(prod.is_identity(0.0), "K={k} j={j}");
            }
        }
    }
}
