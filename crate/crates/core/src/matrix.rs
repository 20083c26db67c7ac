//! Small dense matrices over a [`Scalar`].
//!
//! Only used for model data, verification and test oracles. State evolution
//! goes through the structured kernels in [`crate::braid`].

use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.data[i * dim + i] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Builds a matrix whose column `j` is `columns[j]`.
    pub fn from_columns(columns: Vec<Vec<S>>) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix columns");
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn matmul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Matrix<S> {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn scale(&self, s: &S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.mul(s)).collect() }
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    /// Kronecker product, `self` on the more significant index.
    pub fn kron(&self, rhs: &Matrix<S>) -> Matrix<S> {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul(rhs.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix<S> {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.matmul(self);
        }
        acc
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Entry-wise comparison; exact for the exact backend.
    pub fn close_to(&self, rhs: &Matrix<S>, tol: f64) -> bool {
        (self.rows, self.cols) == (rhs.rows, rhs.cols)
            && self.data.iter().zip(&rhs.data).all(|(a, b)| a.close_to(b, tol))
    }

    /// First entry where the two matrices differ, as `(row, col, lhs, rhs)`.
    pub fn first_mismatch(&self, rhs: &Matrix<S>, tol: f64) -> Option<(usize, usize, S, S)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j).close_to(rhs.get(i, j), tol) {
                    return Some((i, j, self.get(i, j).clone(), rhs.get(i, j).clone()));
                }
            }
        }
        None
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.rows == self.cols && self.close_to(&Self::identity(self.rows), tol)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.matmul(&self.adjoint()).is_identity(tol)
    }

    pub fn commutes_with(&self, rhs: &Matrix<S>, tol: f64) -> bool {
        self.matmul(rhs).close_to(&rhs.matmul(self), tol)
    }

    /// The unit `λ` with `self = λ·rhs`, if one exists.
    pub fn phase_relative_to(&self, rhs: &Matrix<S>, tol: f64) -> Option<S> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return None;
        }
        let pos = rhs.data.iter().position(|x| !x.is_zero())?;
        let b = &rhs.data[pos];
        let inv_sqrt = b.norm_sqr().inv_sqrt_real()?;
        // λ = a·conj(b)/|b|²
        let lambda = self.data[pos].mul(&b.conj()).mul(&inv_sqrt).mul(&inv_sqrt);
        let unit = lambda.norm_sqr().close_to(&S::one(), tol);
        (unit && self.close_to(&rhs.scale(&lambda), tol)).then_some(lambda)
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix").field("rows", &self.rows).field("cols", &self.cols).field("data", &self.data).finish()
    }
}
