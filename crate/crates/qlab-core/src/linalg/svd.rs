use super::eig::{gauge_fix, hermitian_eig};
use super::{inner, normalize, vec_norm, CMatrix};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Singular value decomposition `A = W Sigma V^dag` of a square matrix,
/// singular values descending.
#[derive(Debug, Clone)]
pub struct Svd {
    pub left: CMatrix,
    pub singulars: Vec<f64>,
    pub right: CMatrix,
}

impl Svd {
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.singulars.len();
        let sigma = CMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(self.singulars[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        self.left.matmul(&sigma).matmul(&self.right.dagger())
    }

    /// Largest residual of `A v_i = sigma_i w_i` and `A^dag w_i = sigma_i v_i`.
    pub fn max_residual(&self, a: &CMatrix) -> f64 {
        let ad = a.dagger();
        let mut worst = 0.0f64;
        for (i, &s) in self.singulars.iter().enumerate() {
            let v = self.right.column(i);
            let w = self.left.column(i);
            let av = a.matvec(&v);
            let adw = ad.matvec(&w);
            let r1: f64 = av.iter().zip(&w).map(|(x, y)| (x - s * y).norm_sqr()).sum::<f64>().sqrt();
            let r2: f64 = adw.iter().zip(&v).map(|(x, y)| (x - s * y).norm_sqr()).sum::<f64>().sqrt();
            worst = worst.max(r1).max(r2);
        }
        worst
    }
}

/// SVD via the eigendecomposition of `A^dag A`.
///
/// The gauge is fixed deterministically: each right singular vector has its
/// largest-magnitude entry real positive, and left vectors for vanishing
/// singular values are completed from canonical basis vectors by
/// Gram-Schmidt in index order.
pub fn svd(a: &CMatrix) -> Result<Svd> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let ata = a.dagger().matmul(a);
    let eig = hermitian_eig(&ata)?;

    // Descending singular values.
    let mut singulars = Vec::with_capacity(n);
    let mut right = CMatrix::zeros(n, n);
    for i in 0..n {
        let src = n - 1 - i;
        singulars.push(eig.eigenvalues[src].max(0.0).sqrt());
        right.set_column(i, &gauge_fix(&eig.eigenvector(src)));
    }

    let sigma_max = singulars.first().copied().unwrap_or(0.0);
    let cutoff = 1e-13 * sigma_max.max(1.0);
    let mut left = CMatrix::zeros(n, n);
    let mut fixed = Vec::new();
    for i in 0..n {
        if singulars[i] > cutoff {
            let av = a.matvec(&right.column(i));
            let w = normalize(&av);
            left.set_column(i, &w);
            fixed.push(i);
        }
    }
    // Complete the null-space columns with orthonormalized basis vectors.
    let missing: Vec<usize> = (0..n).filter(|i| singulars[*i] <= cutoff).collect();
    if !missing.is_empty() {
        let mut basis: Vec<Vec<Complex64>> = fixed.iter().map(|&i| left.column(i)).collect();
        for slot in missing {
            let w = super::solve::best_orthogonal_completion(&basis, n);
            left.set_column(slot, &w);
            basis.push(w);
        }
    }

    Ok(Svd { left, singulars, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_distr::{Distribution, StandardNormal};

    #[test]
    fn diagonal_absolute_values() {
        let a = CMatrix::from_real(2, 2, &[0.5, 0.0, 0.0, -0.3]).unwrap();
        let s = svd(&a).unwrap();
        assert!((s.singulars[0] - 0.5).abs() < 1e-12);
        assert!((s.singulars[1] - 0.3).abs() < 1e-12);
        assert!(s.reconstruct().sub(&a).fro_norm() < 1e-12);
    }

    #[test]
    fn unitary_has_unit_singular_values() {
        let h = 1.0 / 2.0_f64.sqrt();
        let u = CMatrix::from_real(2, 2, &[h, h, h, -h]).unwrap();
        let s = svd(&u).unwrap();
        for v in &s.singulars {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn random_reconstruction() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        let a = CMatrix::from_fn(4, 4, |_, _| {
            Complex64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng))
        });
        let s = svd(&a).unwrap();
        assert!(s.reconstruct().sub(&a).fro_norm() < 1e-10);
        assert!(s.max_residual(&a) < 1e-10);
        assert!(s.left.unitarity_error() < 1e-10);
        assert!(s.right.unitarity_error() < 1e-10);
    }

    #[test]
    fn rank_deficient_completes_left_basis() {
        let a = CMatrix::from_real(3, 3, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let s = svd(&a).unwrap();
        assert!((s.singulars[0] - 1.0).abs() < 1e-12);
        assert!(s.singulars[1].abs() < 1e-12);
        assert!(s.left.unitarity_error() < 1e-10);
        assert!(s.reconstruct().sub(&a).fro_norm() < 1e-10);
    }

    #[test]
    fn zero_matrix() {
        let a = CMatrix::zeros(2, 2);
        let s = svd(&a).unwrap();
        assert_eq!(s.singulars, vec![0.0, 0.0]);
        assert!(s.left.unitarity_error() < 1e-12);
    }

    #[test]
    fn rejects_non_square() {
        assert!(svd(&CMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn condition_number_and_singularity() {
        let a = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 0.25]).unwrap();
        assert_eq!(a.condition_number().unwrap(), Some(4.0));
        let z = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(z.condition_number().unwrap(), None);
    }
}
