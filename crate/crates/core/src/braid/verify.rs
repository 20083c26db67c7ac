//! Exact checks of the braid representation: braid relations, unitarity,
//! Pauli gates from squared exchanges, parity projectors.

use std::fmt;

use serde::Serialize;

use super::{generator_matrix, monodromy, parity_projector, qubit_count, Sign};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::{f_matrix, r_matrix};
use crate::scalar::Scalar;

/// Outcome of one identity.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub label: String,
    pub passed: bool,
    /// Empty on success; on failure the first differing entry.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerifyReport { name: name.into(), checks: Vec::new() }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool, detail: String) {
        self.checks.push(CheckResult { label: label.into(), passed, detail });
    }

    /// Records `lhs == rhs` (within `tol` for floats).
    pub fn push_matrix_eq<S: Scalar>(&mut self, label: impl Into<String>, lhs: &Matrix<S>, rhs: &Matrix<S>, tol: f64) {
        let detail = match lhs.first_mismatch(rhs, tol) {
            None if (lhs.rows(), lhs.cols()) == (rhs.rows(), rhs.cols()) => String::new(),
            None => format!("shape {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()),
            Some((r, c, a, b)) => format!("entry ({r},{c}): lhs {} vs rhs {}", describe(&a), describe(&b)),
        };
        self.push(label, detail.is_empty(), detail);
    }

    pub fn extend(&mut self, other: VerifyReport) {
        let prefix = other.name;
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.label = format!("{prefix}: {}", c.label);
            c
        }));
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}/{} checks pass", self.name, self.passed(), self.checks.len())?;
        for c in self.checks.iter().filter(|c| !c.passed) {
            writeln!(f, "  FAIL {}: {}", c.label, c.detail)?;
        }
        Ok(())
    }
}

pub(crate) fn describe<S: Scalar>(s: &S) -> String {
    let z = s.to_c64();
    if S::is_exact() {
        format!("{s:?} ({:.6}{:+.6}i)", z.re, z.im)
    } else {
        format!("{:.12}{:+.12}i", z.re, z.im)
    }
}

/// Which anyon count carries `n` qubits: `2n+1` or `2n+2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Odd,
    Even,
}

impl Family {
    pub fn anyons(self, n: usize) -> usize {
        match self {
            Family::Odd => 2 * n + 1,
            Family::Even => 2 * n + 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Odd => "odd",
            Family::Even => "even",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd" => Ok(Family::Odd),
            "even" => Ok(Family::Even),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

/// Yang–Baxter, distant commutation and unitarity for all generators of
/// `B_K`, as dense matrix identities.
pub fn verify_braid_relations<S: Scalar>(anyons: usize, tol: f64) -> Result<VerifyReport> {
    verify_braid_relations_with(anyons, tol, |j| generator_matrix::<S>(anyons, j))
}

/// [`verify_braid_relations`] with caller-supplied generator matrices.
pub fn verify_braid_relations_with<S: Scalar>(
    anyons: usize,
    tol: f64,
    gen: impl Fn(usize) -> Result<Matrix<S>>,
) -> Result<VerifyReport> {
    if anyons < 3 {
        return Err(Error::GeneratorOutOfRange { index: 2, anyons });
    }
    let b: Vec<Matrix<S>> = (1..anyons).map(&gen).collect::<Result<_>>()?;
    let mut report = VerifyReport::new(format!("braid relations K={anyons}"));
    for (i, g) in b.iter().enumerate() {
        report.push_matrix_eq(format!("b{} unitary", i + 1), &g.matmul(&g.adjoint()), &Matrix::identity(g.rows()), tol);
    }
    for i in 0..b.len() - 1 {
        let lhs = b[i].matmul(&b[i + 1]).matmul(&b[i]);
        let rhs = b[i + 1].matmul(&b[i]).matmul(&b[i + 1]);
        report.push_matrix_eq(format!("b{0} b{1} b{0} = b{1} b{0} b{1}", i + 1, i + 2), &lhs, &rhs, tol);
    }
    for i in 0..b.len() {
        for j in i + 2..b.len() {
            let lhs = b[i].matmul(&b[j]);
            let rhs = b[j].matmul(&b[i]);
            report.push_matrix_eq(format!("b{} b{} = b{} b{}", i + 1, j + 1, j + 1, i + 1), &lhs, &rhs, tol);
        }
    }
    Ok(report)
}

fn pauli_x<S: Scalar>() -> Matrix<S> {
    Matrix::from_rows(vec![vec![S::zero(), S::one()], vec![S::one(), S::zero()]])
}

fn pauli_z<S: Scalar>() -> Matrix<S> {
    Matrix::diagonal(&[S::one(), S::one().neg()])
}

/// `op` on qubit `q` of `n` (1-based), identity elsewhere.
pub fn embed_1q<S: Scalar>(op: &Matrix<S>, q: usize, n: usize) -> Matrix<S> {
    Matrix::identity(1 << (q - 1)).kron(op).kron(&Matrix::identity(1 << (n - q)))
}

fn square<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    m.matmul(m)
}

/// Pauli gates from squared exchanges on `2n+1` (odd family) or `2n+2`
/// (even family) anyons.
///
/// Both families: `τ3^{(j)} = b_{2j-1}²`, the `τ1` chain
/// `b_{2j}² b_{2j+2}² ⋯ b_{2n}²` and `b_{2n-1} b_{2n}² b_{2n-1} b_{2n}² = i`.
/// The chain gives `τ1^{(j)}` in the odd family and `τ1^{(j)} ⊗ τ1^{(n+1)}`
/// in the even family. The even family also checks that `P±` commute with
/// every generator and that the closed-form `b_{2j}` and its square agree
/// with `F`, `R` and the CNOT basis change.
pub fn verify_pauli_identities<S: Scalar>(n: usize, family: Family, tol: f64) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::QubitOutOfRange { qubit: 0, qubits: 0 });
    }
    let k = family.anyons(n);
    let q = qubit_count(k);
    let mut report = VerifyReport::new(format!("pauli identities n={n} family={family} (K={k})"));
    let b: Vec<Matrix<S>> = (1..k).map(|j| generator_matrix::<S>(k, j)).collect::<Result<_>>()?;
    let g = |j: usize| &b[j - 1];
    let x = pauli_x::<S>();
    let z = pauli_z::<S>();

    for j in 1..=n {
        report.push_matrix_eq(format!("tau3^({j}) = b{}^2", 2 * j - 1), &square(g(2 * j - 1)), &embed_1q(&z, j, q), tol);
    }
    for j in 1..=n {
        let mut chain = Matrix::identity(1 << q);
        for i in (j..=n).map(|i| 2 * i) {
            chain = chain.matmul(&square(g(i)));
        }
        let (label, expect) = match family {
            Family::Odd => (format!("tau1^({j}) = b{}^2 .. b{}^2", 2 * j, 2 * n), embed_1q(&x, j, q)),
            Family::Even => (
                format!("tau1^({j}) x tau1^({}) = b{}^2 .. b{}^2", n + 1, 2 * j, 2 * n),
                embed_1q(&x, j, q).matmul(&embed_1q(&x, n + 1, q)),
            ),
        };
        report.push_matrix_eq(label, &chain, &expect, tol);
    }
    {
        let a = g(2 * n - 1);
        let s2 = square(g(2 * n));
        let lhs = a.matmul(&s2).matmul(a).matmul(&s2);
        let rhs = Matrix::identity(1 << q).scale(&S::zeta_pow(2));
        report.push_matrix_eq(format!("b{0} b{1}^2 b{0} b{1}^2 = i", 2 * n - 1, 2 * n), &lhs, &rhs, tol);
    }
    // closed-form monodromy against the literal square
    for j in 1..k {
        let closed = monodromy::<S>(k, j)?.to_matrix(q)?;
        report.push_matrix_eq(format!("b{j}^2 closed form"), &square(g(j)), &closed, tol);
    }

    if family == Family::Even {
        for sign in [Sign::Plus, Sign::Minus] {
            let p = parity_projector::<S>(n, sign).to_matrix(q)?;
            let s = if sign == Sign::Plus { '+' } else { '-' };
            report.push_matrix_eq(format!("P{s} idempotent"), &p.matmul(&p), &p, tol);
            for (j, bj) in b.iter().enumerate() {
                report.push_matrix_eq(format!("[P{s}, b{}] = 0", j + 1), &p.matmul(bj), &bj.matmul(&p), tol);
            }
        }
        let pp = parity_projector::<S>(n, Sign::Plus).to_matrix(q)?;
        let pm = parity_projector::<S>(n, Sign::Minus).to_matrix(q)?;
        report.push_matrix_eq("P+ + P- = I", &pp.add(&pm), &Matrix::identity(1 << q), tol);

        let frf = f_matrix::<S>().matmul(&r_matrix()).matmul(&f_matrix());
        let cn = super::cnot::<S>(1).to_matrix(2)?;
        let derived = cn.matmul(&frf.kron(&Matrix::identity(2))).matmul(&cn);
        for j in 1..=n {
            let expect = Matrix::identity(1 << (j - 1)).kron(&derived).kron(&Matrix::identity(1 << (q - j - 1)));
            report.push_matrix_eq(format!("b{} = CN (F R F x I) CN", 2 * j), g(2 * j), &expect, tol);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycScalar;
    use num_complex::Complex64;

    type C = CycScalar;

    #[test]
    fn small_braid_relations_hold() {
        for k in [3, 4, 5, 6] {
            let r = verify_braid_relations::<C>(k, 0.0).unwrap();
            assert!(r.all_pass(), "{r}");
        }
    }

    #[test]
    fn sabotaged_generator_breaks_yang_baxter() {
        let k = 4;
        let r = verify_braid_relations_with::<C>(k, 0.0, |j| {
            let mut m = generator_matrix::<C>(k, j)?;
            if j == 2 {
                let v = m.get(0, 3).neg();
                m.set(0, 3, v);
            }
            Ok(m)
        })
        .unwrap();
        assert!(!r.all_pass());
        let fail = r.checks.iter().find(|c| c.label.starts_with("b1 b2 b1")).unwrap();
        assert!(!fail.passed);
        assert!(fail.detail.contains("entry"));
    }

    #[test]
    fn pauli_identities_small() {
        for n in 1..=3 {
            for fam in [Family::Odd, Family::Even] {
                let r = verify_pauli_identities::<C>(n, fam, 0.0).unwrap();
                assert!(r.all_pass(), "{r}");
            }
        }
    }

    #[test]
    fn pauli_identities_float() {
        let r = verify_pauli_identities::<Complex64>(2, Family::Even, 1e-12).unwrap();
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn scalar_identity_on_four_anyons_by_hand() {
        // diag(1,i)⊗I · τ1τ1 · diag(1,i)⊗I · τ1τ1
        let d = Matrix::diagonal(&[C::one(), C::i()]).kron(&Matrix::identity(2));
        let xx = pauli_x::<C>().kron(&pauli_x());
        let lhs = d.matmul(&xx).matmul(&d).matmul(&xx);
        assert_eq!(lhs, Matrix::identity(4).scale(&C::i()));
    }
}
