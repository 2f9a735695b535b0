use super::{inner, CMatrix, ONE, ZERO};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// an orthonormal eigenvector matrix (eigenvectors as columns).
#[derive(Debug, Clone)]
pub struct HermEig {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMatrix,
}

impl HermEig {
    pub fn eigenvector(&self, i: usize) -> Vec<Complex64> {
        self.eigenvectors.column(i)
    }

    /// Largest residual `||A v_i - lambda_i v_i||` over all pairs.
    pub fn max_residual(&self, a: &CMatrix) -> f64 {
        let mut worst = 0.0f64;
        for (i, &lam) in self.eigenvalues.iter().enumerate() {
            let v = self.eigenvector(i);
            let av = a.matvec(&v);
            let r: f64 = av
                .iter()
                .zip(&v)
                .map(|(x, y)| (x - lam * y).norm_sqr())
                .sum::<f64>()
                .sqrt();
            worst = worst.max(r);
        }
        worst
    }
}

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Sweeps zero out off-diagonal entries with two-sided unitary rotations
/// until the off-diagonal Frobenius mass falls below `1e-12` relative to the
/// matrix scale. The sweep order is fixed, so the result is deterministic for
/// a given input. Eigenvalues come back ascending; each eigenvector is gauge
/// fixed so that its largest-magnitude entry is real positive.
pub fn hermitian_eig(a: &CMatrix) -> Result<HermEig> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    a.check_hermitian(1e-10)?;
    let n = a.rows();
    if n == 0 {
        return Ok(HermEig { eigenvalues: vec![], eigenvectors: CMatrix::zeros(0, 0) });
    }

    // Work on the exactly Hermitian part so roundoff in the input cannot
    // leak into complex eigenvalues.
    let mut m = CMatrix::from_fn(n, n, |i, j| 0.5 * (a[(i, j)] + a[(j, i)].conj()));
    let mut v = CMatrix::identity(n);

    let scale = m.fro_norm().max(1.0);
    let tol = 1e-12 * scale;
    let max_sweeps = 60;

    for _ in 0..max_sweeps {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[(p, q)].norm_sqr();
            }
        }
        if (2.0 * off).sqrt() <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq.norm() <= tol / (n as f64) {
                    continue;
                }
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let abs = apq.norm();
                let phase = apq / abs; // e^{i phi}
                // Real Jacobi angle for the phase-stripped 2x2 block.
                let tau = (aqq - app) / (2.0 * abs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // R = P G restricted to columns (p, q):
                //   col p: (c, -s e^{-i phi});  col q: (s, c e^{-i phi}).
                let rpp = Complex64::new(c, 0.0);
                let rqp = -s * phase.conj();
                let rpq = Complex64::new(s, 0.0);
                let rqq = c * phase.conj();

                // M <- R^dag M R, applied as column then row updates.
                for i in 0..n {
                    let mip = m[(i, p)];
                    let miq = m[(i, q)];
                    m[(i, p)] = mip * rpp + miq * rqp;
                    m[(i, q)] = mip * rpq + miq * rqq;
                }
                for j in 0..n {
                    let mpj = m[(p, j)];
                    let mqj = m[(q, j)];
                    m[(p, j)] = rpp.conj() * mpj + rqp.conj() * mqj;
                    m[(q, j)] = rpq.conj() * mpj + rqq.conj() * mqj;
                }
                // Re-symmetrize the pivot entries exactly.
                m[(p, q)] = ZERO;
                m[(q, p)] = ZERO;
                m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
                m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);

                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip * rpp + viq * rqp;
                    v[(i, q)] = vip * rpq + viq * rqq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.partial_cmp(&m[(j, j)].re).unwrap());

    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut eigenvectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let col = gauge_fix(&v.column(src));
        eigenvectors.set_column(dst, &col);
    }
    Ok(HermEig { eigenvalues, eigenvectors })
}

/// Multiply by a phase so the largest-magnitude entry is real positive.
pub(crate) fn gauge_fix(v: &[Complex64]) -> Vec<Complex64> {
    let mut best = 0usize;
    let mut best_mag = -1.0f64;
    for (i, z) in v.iter().enumerate() {
        let m = z.norm();
        if m > best_mag + 1e-14 {
            best_mag = m;
            best = i;
        }
    }
    if best_mag <= 0.0 {
        return v.to_vec();
    }
    let phase = v[best] / v[best].norm();
    v.iter().map(|z| z / phase).collect()
}

/// Orthonormality defect of the columns of `u`.
pub fn orthonormality_error(u: &CMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..u.cols() {
        for j in 0..u.cols() {
            let d = inner(&u.column(i), &u.column(j));
            let target = if i == j { ONE } else { ZERO };
            worst = worst.max((d - target).norm());
        }
    }
    worst
}
