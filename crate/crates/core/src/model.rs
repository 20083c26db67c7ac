//! Ising anyon model data: charges, fusion rules, quantum dimensions and the
//! `F` and `R` matrices for three/two `σ` anyons.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{CycScalar, Scalar};

/// Topological charge of the Ising model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Charge {
    /// Vacuum, the fusion identity.
    Vac,
    /// The non-abelian Ising anyon `σ`.
    Sigma,
    /// The fermion.
    Psi,
}

impl Charge {
    pub const ALL: [Charge; 3] = [Charge::Vac, Charge::Sigma, Charge::Psi];

    /// 0 for the vacuum, 1 for the fermion. `σ` has no parity.
    pub fn parity(self) -> Result<u8> {
        match self {
            Charge::Vac => Ok(0),
            Charge::Psi => Ok(1),
            Charge::Sigma => Err(Error::InvalidLabels("parity is undefined for sigma".into())),
        }
    }

    pub fn from_parity(bit: u8) -> Charge {
        if bit % 2 == 0 {
            Charge::Vac
        } else {
            Charge::Psi
        }
    }

    pub fn is_abelian(self) -> bool {
        self != Charge::Sigma
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Charge::Vac => "0",
            Charge::Sigma => "sigma",
            Charge::Psi => "1",
        })
    }
}

/// Fusion outcomes of `a × b`, in `Charge` order.
pub fn fuse(a: Charge, b: Charge) -> Vec<Charge> {
    use Charge::*;
    match (a, b) {
        (Vac, x) | (x, Vac) => vec![x],
        (Sigma, Sigma) => vec![Vac, Psi],
        (Sigma, Psi) | (Psi, Sigma) => vec![Sigma],
        (Psi, Psi) => vec![Vac],
    }
}

/// Quantum dimension: `1` for the abelian charges, `√2` for `σ`.
pub fn quantum_dim(c: Charge) -> CycScalar {
    match c {
        Charge::Sigma => CycScalar::sqrt2(),
        _ => CycScalar::one(),
    }
}

/// `F^{σσσ}_σ = (1/√2)[[1, 1], [1, -1]]`, rows and columns indexed by the
/// intermediate channel 0, 1.
pub fn f_matrix<S: Scalar>() -> Matrix<S> {
    let one = S::one();
    Matrix::from_rows(vec![vec![one.clone(), one.clone()], vec![one.clone(), one.neg()]]).scale(&S::inv_sqrt2())
}

/// `R_{σσ} = diag(1, i)`: exchange phase in channel 0 and channel 1.
pub fn r_matrix<S: Scalar>() -> Matrix<S> {
    Matrix::diagonal(&[S::one(), S::zeta_pow(2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    type M = Matrix<CycScalar>;

    #[test]
    fn fusion_rules() {
        assert_eq!(fuse(Charge::Sigma, Charge::Sigma), vec![Charge::Vac, Charge::Psi]);
        assert_eq!(fuse(Charge::Psi, Charge::Psi), vec![Charge::Vac]);
        assert_eq!(fuse(Charge::Vac, Charge::Sigma), vec![Charge::Sigma]);
        assert_eq!(fuse(Charge::Psi, Charge::Sigma), vec![Charge::Sigma]);
    }

    #[test]
    fn fusion_is_commutative_with_vacuum_identity() {
        for a in Charge::ALL {
            assert_eq!(fuse(Charge::Vac, a), vec![a]);
            for b in Charge::ALL {
                assert_eq!(fuse(a, b), fuse(b, a));
            }
        }
    }

    fn fuse_multiset(lhs: &[Charge], c: Charge) -> BTreeMap<Charge, usize> {
        let mut out = BTreeMap::new();
        for &x in lhs {
            for y in fuse(x, c) {
                *out.entry(y).or_insert(0) += 1;
            }
        }
        out
    }

    fn fuse_multiset_left(a: Charge, rhs: &[Charge]) -> BTreeMap<Charge, usize> {
        let mut out = BTreeMap::new();
        for &x in rhs {
            for y in fuse(a, x) {
                *out.entry(y).or_insert(0) += 1;
            }
        }
        out
    }

    #[test]
    fn fusion_is_associative_on_all_triples() {
        for a in Charge::ALL {
            for b in Charge::ALL {
                for c in Charge::ALL {
                    let left = fuse_multiset(&fuse(a, b), c);
                    let right = fuse_multiset_left(a, &fuse(b, c));
                    assert_eq!(left, right, "({a} x {b}) x {c}");
                }
            }
        }
    }

    #[test]
    fn f_matrix_entries_and_involution() {
        let f: M = f_matrix();
        assert_eq!(*f.get(0, 0), CycScalar::inv_sqrt2());
        assert_eq!(*f.get(1, 1), CycScalar::inv_sqrt2().neg());
        assert!(f.matmul(&f).is_identity(0.0));
        let det = f.get(0, 0).mul(f.get(1, 1)).sub(&f.get(0, 1).mul(f.get(1, 0)));
        assert_eq!(det, CycScalar::one().neg());
    }

    #[test]
    fn r_matrix_properties() {
        let r: M = r_matrix();
        assert_eq!(*r.get(1, 1), CycScalar::i());
        assert!(r.is_unitary(0.0));
        assert!(r.pow(4).is_identity(0.0));
        let r2 = r.pow(2);
        assert_eq!(r2, M::diagonal(&[CycScalar::one(), CycScalar::one().neg()]));
    }

    #[test]
    fn quantum_dimensions() {
        assert_eq!(quantum_dim(Charge::Sigma), CycScalar::sqrt2());
        assert_eq!(quantum_dim(Charge::Vac), CycScalar::one());
        assert_eq!(quantum_dim(Charge::Psi), CycScalar::one());
        // d_σ² = d_0 + d_1 from σ × σ = 0 + 1
        let ds = quantum_dim(Charge::Sigma);
        assert_eq!(ds.mul(&ds), quantum_dim(Charge::Vac).add(&quantum_dim(Charge::Psi)));
    }

    #[test]
    fn parity_labels() {
        assert_eq!(Charge::Vac.parity().unwrap(), 0);
        assert_eq!(Charge::Psi.parity().unwrap(), 1);
        assert!(Charge::Sigma.parity().is_err());
        assert_eq!(Charge::from_parity(3), Charge::Psi);
    }
}
