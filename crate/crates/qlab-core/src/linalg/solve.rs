use super::{inner, normalize, vec_norm, CMatrix, ONE, ZERO};
use crate::error::{Error, Result};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// Solve `A x = b` by LU factorization with partial pivoting.
pub fn lu_solve(a: &CMatrix, b: &[Complex64]) -> Result<Vec<Complex64>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if b.len() != n {
        return Err(Error::DimensionMismatch { left: b.len(), right: n });
    }
    let mut lu = a.clone();
    let mut x = b.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();

    for k in 0..n {
        let mut pivot = k;
        let mut best = lu[(k, k)].norm();
        for i in (k + 1)..n {
            let m = lu[(i, k)].norm();
            if m > best {
                best = m;
                pivot = i;
            }
        }
        if best < 1e-300 {
            return Err(Error::PreconditionViolated { reason: "singular matrix in lu_solve".into() });
        }
        if pivot != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(pivot, j)];
                lu[(pivot, j)] = tmp;
            }
            perm.swap(k, pivot);
            x.swap(k, pivot);
        }
        let d = lu[(k, k)];
        for i in (k + 1)..n {
            let f = lu[(i, k)] / d;
            lu[(i, k)] = f;
            for j in (k + 1)..n {
                let s = lu[(k, j)];
                lu[(i, j)] -= f * s;
            }
            let xk = x[k];
            x[i] -= f * xk;
        }
    }
    // Back substitution.
    for i in (0..n).rev() {
        let mut acc = x[i];
        for j in (i + 1)..n {
            acc -= lu[(i, j)] * x[j];
        }
        x[i] = acc / lu[(i, i)];
    }
    Ok(x)
}

/// Haar-like random unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases absorbed, Gram-Schmidt in column order.
pub fn qr_unitary(n: usize, rng: &mut impl Rng) -> CMatrix {
    let g = CMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let mut q = CMatrix::zeros(n, n);
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = g.column(j);
        for c in &cols {
            let ov = inner(c, &v);
            for (x, y) in v.iter_mut().zip(c) {
                *x -= ov * y;
            }
        }
        // Repeat once for numerical orthogonality.
        for c in &cols {
            let ov = inner(c, &v);
            for (x, y) in v.iter_mut().zip(c) {
                *x -= ov * y;
            }
        }
        let v = normalize(&v);
        q.set_column(j, &v);
        cols.push(v);
    }
    q
}

/// Deterministically extend a set of orthonormal columns to a full unitary.
pub fn complete_unitary(columns: &[Vec<Complex64>], dim: usize) -> CMatrix {
    assert!(columns.len() <= dim);
    let mut basis: Vec<Vec<Complex64>> = columns.to_vec();
    while basis.len() < dim {
        let next = best_orthogonal_completion(&basis, dim);
        basis.push(next);
    }
    let mut u = CMatrix::zeros(dim, dim);
    for (j, col) in basis.iter().enumerate() {
        u.set_column(j, col);
    }
    u
}

/// The canonical basis vector with the largest residual against `basis`,
/// orthonormalized. Deterministic; twice-iterated Gram-Schmidt keeps the
/// result orthogonal to working precision.
pub(crate) fn best_orthogonal_completion(basis: &[Vec<Complex64>], dim: usize) -> Vec<Complex64> {
    assert!(basis.len() < dim, "basis already complete");
    let residual_of = |j: usize| -> Vec<Complex64> {
        let mut cand: Vec<Complex64> = (0..dim).map(|i| if i == j { ONE } else { ZERO }).collect();
        for _ in 0..2 {
            for b in basis {
                let ov = inner(b, &cand);
                for (x, y) in cand.iter_mut().zip(b) {
                    *x -= ov * y;
                }
            }
        }
        cand
    };
    let mut best = residual_of(0);
    let mut best_norm = vec_norm(&best);
    for j in 1..dim {
        let cand = residual_of(j);
        let norm = vec_norm(&cand);
        if norm > best_norm + 1e-12 {
            best = cand;
            best_norm = norm;
        }
    }
    assert!(best_norm > 1e-8, "no orthogonal direction left");
    normalize(&best)
}
