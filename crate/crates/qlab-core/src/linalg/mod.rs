//! Dense complex linear algebra used as the ground-truth oracle throughout
//! the library.
//!
//! Everything here is deterministic: the Hermitian eigensolver is a cyclic
//! Jacobi iteration, the SVD is derived from it with an explicit gauge fix,
//! and no randomized or architecture-dependent kernels are involved. Storage
//! is dense, row-major `Vec<Complex64>`, capped at dimension 2^14.

mod eig;
mod functions;
mod gershgorin;
mod solve;
mod svd;

pub use eig::{hermitian_eig, HermEig};
pub use functions::{matrix_exp_i, matrix_function, singular_function, SingularSide};
pub use gershgorin::{compose_error, gershgorin_bounds, IntervalUnion};
pub use solve::{lu_solve, qr_unitary};
pub use svd::{svd, Svd};

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Hard cap on any dense dimension handled by this crate.
pub const DIMENSION_CAP: usize = 1 << 14;

/// Tolerance for unitarity / hermiticity checks on constructed operators.
pub const UNITARY_TOL: f64 = 1e-10;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(
            rows <= DIMENSION_CAP && cols <= DIMENSION_CAP,
            "dimension {}x{} exceeds cap {}",
            rows,
            cols,
            DIMENSION_CAP
        );
        CMatrix { rows, cols, entries: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Row-major construction from a flat entry list.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { left: entries.len(), right: rows * cols });
        }
        if rows > DIMENSION_CAP || cols > DIMENSION_CAP {
            return Err(Error::DimensionCap { dim: rows.max(cols), cap: DIMENSION_CAP });
        }
        Ok(CMatrix { rows, cols, entries })
    }

    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        Self::from_entries(rows, cols, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn diag(values: &[Complex64]) -> Self {
        let mut m = CMatrix::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Complex64]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i];
        }
    }

    pub fn dagger(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conjugate(&self) -> CMatrix {
        CMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|z| z.conj()).collect() }
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, c: Complex64) -> CMatrix {
        CMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|z| z * c).collect() }
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        // ikj loop order keeps the inner traversal contiguous.
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                let lhs = &other.entries[k * other.cols..(k + 1) * other.cols];
                let out_row = &mut out.entries[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(lhs) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![ZERO; self.rows];
        for i in 0..self.rows {
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        out
    }

    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == ZERO {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn pow(&self, k: usize) -> CMatrix {
        assert!(self.is_square());
        let mut result = CMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.matmul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.matmul(&base);
            }
        }
        result
    }

    /// Frobenius norm.
    pub fn fro_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Operator norm (largest singular value).
    pub fn op_norm(&self) -> f64 {
        if self.entries.iter().all(|z| *z == ZERO) {
            return 0.0;
        }
        svd(self).expect("op_norm requires a square matrix").singulars[0]
    }

    /// `max(1, ||A||_F)`-relative hermiticity defect `||A - A^dag||_F`.
    pub fn hermiticity_error(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut acc = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt() / 2.0_f64.sqrt()
    }

    /// Unitarity defect `||U^dag U - I||_F`. The Frobenius norm dominates the
    /// operator norm, so passing this check at a tolerance passes the
    /// operator-norm check as well.
    pub fn unitarity_error(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.dagger().matmul(self).sub(&CMatrix::identity(self.rows)).fro_norm()
    }

    pub fn check_unitary(&self, tol: f64) -> Result<()> {
        let dev = self.unitarity_error();
        if dev > tol {
            return Err(Error::NotUnitary { deviation: dev });
        }
        Ok(())
    }

    pub fn check_hermitian(&self, tol: f64) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let dev = self.hermiticity_error();
        if dev > tol {
            return Err(Error::NotHermitian { deviation: dev });
        }
        Ok(())
    }

    /// Condition number sigma_max / sigma_min; `None` reports a numerically
    /// singular matrix (sigma_min < 1e-13).
    pub fn condition_number(&self) -> Result<Option<f64>> {
        let s = svd(self)?;
        let smax = s.singulars[0];
        let smin = *s.singulars.last().unwrap();
        if smin < 1e-13 {
            return Ok(None);
        }
        Ok(Some(smax / smin))
    }

    /// Top-left square block of the given dimension.
    pub fn top_left(&self, dim: usize) -> CMatrix {
        CMatrix::from_fn(dim, dim, |i, j| self[(i, j)])
    }

    pub fn outer(u: &[Complex64], v: &[Complex64]) -> CMatrix {
        CMatrix::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.cols + j]
    }
}

/// `<u|v>` with the physics convention: conjugate-linear in the first slot.
pub fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn vec_sub(u: &[Complex64], v: &[Complex64]) -> Vec<Complex64> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_scale(v: &[Complex64], c: Complex64) -> Vec<Complex64> {
    v.iter().map(|z| z * c).collect()
}

pub fn normalize(v: &[Complex64]) -> Vec<Complex64> {
    let n = vec_norm(v);
    assert!(n > 0.0, "cannot normalize the zero vector");
    v.iter().map(|z| z / n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn matmul_against_hand_computation() {
        let a = CMatrix::from_entries(2, 2, vec![c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0), c(0.0, 0.0)]).unwrap();
        let b = CMatrix::from_entries(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let ab = a.matmul(&b);
        assert_eq!(ab[(0, 0)], c(0.0, 1.0));
        assert_eq!(ab[(0, 1)], c(1.0, 0.0));
        assert_eq!(ab[(1, 0)], c(0.0, 0.0));
        assert_eq!(ab[(1, 1)], c(2.0, 0.0));
    }

    #[test]
    fn kron_ordering_matches_row_major_convention() {
        // X (x) I maps |00> -> |10>, i.e. column 0 has a 1 in row 2.
        let x = CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let xi = x.kron(&CMatrix::identity(2));
        assert_eq!(xi[(2, 0)], ONE);
        assert_eq!(xi[(0, 2)], ONE);
        assert_eq!(xi[(0, 0)], ZERO);
    }

    #[test]
    fn entry_count_enforced() {
        assert!(CMatrix::from_entries(2, 2, vec![ZERO; 3]).is_err());
    }

    #[test]
    fn unitarity_check_flags_nonunitary() {
        let m = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 2.0]).unwrap();
        assert!(m.check_unitary(1e-10).is_err());
        assert!(CMatrix::identity(4).check_unitary(1e-12).is_ok());
    }
}
