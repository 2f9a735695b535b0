use super::instance::{InstanceSource, QlspInstance, QlspMetadata};
use crate::error::{Error, Result};
use crate::linalg::{normalize, CMatrix};
use num_complex::Complex64;

/// Closed-form eigenpairs of a Hermitian Toeplitz tridiagonal matrix with
/// diagonal `a` and subdiagonal `b`:
/// `lambda_k = a + 2|b| cos(k pi/(N+1))`,
/// `v_{j,k} = sin(j k pi/(N+1)) e^{i j theta}` with `b = |b| e^{i theta}`,
/// eigenvalues ascending, eigenvectors normalized.
#[derive(Debug, Clone)]
pub struct AnalyticEigs {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<Complex64>>,
}

pub fn tridiag_eigs(a: f64, b: Complex64, n: usize) -> AnalyticEigs {
    let theta = b.arg();
    let babs = b.norm();
    let mut pairs: Vec<(f64, Vec<Complex64>)> = (1..=n)
        .map(|k| {
            let lambda = a + 2.0 * babs * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            let v: Vec<Complex64> = (1..=n)
                .map(|j| {
                    let amp = ((j * k) as f64 * std::f64::consts::PI / (n as f64 + 1.0)).sin();
                    Complex64::new(0.0, j as f64 * theta).exp() * amp
                })
                .collect();
            (lambda, normalize(&v))
        })
        .collect();
    pairs.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    AnalyticEigs {
        eigenvalues: pairs.iter().map(|p| p.0).collect(),
        eigenvectors: pairs.into_iter().map(|p| p.1).collect(),
    }
}

impl AnalyticEigs {
    /// Largest residual `||A v - lambda v||` against a dense matrix.
    pub fn max_residual(&self, a: &CMatrix) -> f64 {
        let mut worst = 0.0f64;
        for (lambda, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            let av = a.matvec(v);
            let r: f64 = av
                .iter()
                .zip(v)
                .map(|(x, y)| (x - lambda * y).norm_sqr())
                .sum::<f64>()
                .sqrt();
            worst = worst.max(r);
        }
        worst
    }
}

/// Dense 1-D Dirichlet Laplacian `(1/h^2) tridiag(-1, 2, -1)` on `n` grid
/// points, `h = 1/(n+1)`.
pub fn laplacian_1d(n: usize) -> CMatrix {
    let h = 1.0 / (n as f64 + 1.0);
    let inv_h2 = 1.0 / (h * h);
    CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(2.0 * inv_h2, 0.0)
        } else if i.abs_diff(j) == 1 {
            Complex64::new(-inv_h2, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `d`-dimensional Kronecker-sum Laplacian on `n` points per dimension.
pub fn laplacian_nd(n: usize, dims: usize) -> CMatrix {
    let a1 = laplacian_1d(n);
    let mut total = CMatrix::zeros(n.pow(dims as u32), n.pow(dims as u32));
    for axis in 0..dims {
        let mut term = CMatrix::identity(1);
        for k in 0..dims {
            let factor = if k == axis { a1.clone() } else { CMatrix::identity(n) };
            term = term.kron(&factor);
        }
        total = total.add(&term);
    }
    total
}

/// Analytic extreme eigenvalues of the `d`-dimensional Laplacian: each
/// eigenvalue is a sum of `d` one-dimensional ones.
pub fn poisson_extreme_eigs(n: usize, dims: usize) -> (f64, f64) {
    let h = 1.0 / (n as f64 + 1.0);
    let one_d = |k: usize| (2.0 - 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos()) / (h * h);
    (dims as f64 * one_d(1), dims as f64 * one_d(n))
}

/// Discretized Poisson instance. The operator is rescaled to unit operator
/// norm (the analytic largest eigenvalue), the scale recorded, and the
/// right-hand side is the normalized all-ones vector.
pub fn build_poisson(n: usize, dims: usize) -> Result<QlspInstance> {
    if dims == 0 || n == 0 {
        return Err(Error::ParameterOutOfRange { reason: "empty grid".into() });
    }
    let total = n.pow(dims as u32);
    if total > 1 << 12 {
        return Err(Error::DimensionCap { dim: total, cap: 1 << 12 });
    }
    let dense = laplacian_nd(n, dims);
    let (_, lambda_max) = poisson_extreme_eigs(n, dims);
    let scaled = dense.scale(Complex64::new(1.0 / lambda_max, 0.0));
    let rhs = normalize(&vec![Complex64::new(1.0, 0.0); total]);
    let metadata = QlspMetadata {
        source: InstanceSource::Poisson,
        grid_points: Some(n),
        dims: Some(dims),
        dt: None,
        steps: None,
        matrix_scale: lambda_max,
        rhs_scale: (total as f64).sqrt(),
        stable: None,
        kappa_v: Some(1.0),
    };
    QlspInstance::new(scaled, rhs, metadata)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tridiagonal_closed_forms() {
        // a = 2, b = -1, N = 2: eigenvalues {1, 3}.
        let eigs = tridiag_eigs(2.0, Complex64::new(-1.0, 0.0), 2);
        assert!((eigs.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((eigs.eigenvalues[1] - 3.0).abs() < 1e-12);
        // b = 0: all eigenvalues equal a.
        let flat = tridiag_eigs(0.7, Complex64::new(0.0, 0.0), 3);
        assert!(flat.eigenvalues.iter().all(|l| (l - 0.7).abs() < 1e-12));
        // a = 0, b = 1/2, N = 3: {-sqrt(2)/2, 0, sqrt(2)/2}.
        let mid = tridiag_eigs(0.0, Complex64::new(0.5, 0.0), 3);
        let s = 2.0_f64.sqrt() / 2.0;
        assert!((mid.eigenvalues[0] + s).abs() < 1e-12);
        assert!(mid.eigenvalues[1].abs() < 1e-12);
        assert!((mid.eigenvalues[2] - s).abs() < 1e-12);
    }

    #[test]
    fn analytic_pairs_solve_the_dense_matrix() {
        let n = 6;
        let a = CMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(2.0, 0.0)
            } else if i + 1 == j {
                Complex64::new(-0.5, 0.3).conj()
            } else if j + 1 == i {
                Complex64::new(-0.5, 0.3)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let eigs = tridiag_eigs(2.0, Complex64::new(-0.5, 0.3), n);
        assert!(eigs.max_residual(&a) < 1e-10);
    }

    #[test]
    fn poisson_kappa_matches_analytic_ratio() {
        let inst = build_poisson(16, 1).unwrap();
        let (lo, hi) = poisson_extreme_eigs(16, 1);
        assert!((inst.kappa - hi / lo).abs() < 1e-6 * (hi / lo));
        assert!((inst.matrix.op_norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn poisson_kappa_is_dimension_independent() {
        let one_d = build_poisson(3, 1).unwrap();
        let two_d = build_poisson(3, 2).unwrap();
        assert!((one_d.kappa - two_d.kappa).abs() < 1e-8, "{} vs {}", one_d.kappa, two_d.kappa);
    }

    #[test]
    fn dimension_cap() {
        assert!(build_poisson(64, 2).is_err());
    }
}
