use super::eig::hermitian_eig;
use super::svd::svd;
use super::CMatrix;
use crate::error::Result;
use num_complex::Complex64;

/// `f(A) = V f(Lambda) V^dag` for Hermitian `A`.
pub fn matrix_function(a: &CMatrix, f: impl Fn(f64) -> Complex64) -> Result<CMatrix> {
    let eig = hermitian_eig(a)?;
    let v = &eig.eigenvectors;
    let fl = CMatrix::diag(&eig.eigenvalues.iter().map(|&l| f(l)).collect::<Vec<_>>());
    Ok(v.matmul(&fl).matmul(&v.dagger()))
}

/// Time evolution operator `e^{-i H t}` of a Hermitian `H`.
pub fn matrix_exp_i(h: &CMatrix, t: f64) -> Result<CMatrix> {
    matrix_function(h, |l| (Complex64::new(0.0, -l * t)).exp())
}

/// Which singular-vector basis carries a generalized matrix function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularSide {
    /// `W f(Sigma) V^dag`: maps right singular vectors onto left ones.
    Mixed,
    /// `V f(Sigma) V^dag`: right singular vectors only.
    Right,
    /// `W f(Sigma) W^dag`: left singular vectors only.
    Left,
}

/// Generalized matrix function of a square matrix through its SVD.
pub fn singular_function(
    a: &CMatrix,
    side: SingularSide,
    f: impl Fn(f64) -> Complex64,
) -> Result<CMatrix> {
    let s = svd(a)?;
    let fs = CMatrix::diag(&s.singulars.iter().map(|&x| f(x)).collect::<Vec<_>>());
    Ok(match side {
        SingularSide::Mixed => s.left.matmul(&fs).matmul(&s.right.dagger()),
        SingularSide::Right => s.right.matmul(&fs).matmul(&s.right.dagger()),
        SingularSide::Left => s.left.matmul(&fs).matmul(&s.left.dagger()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{vec_norm, vec_sub, ZERO};

    #[test]
    fn exp_of_pauli_x_rotates_zero_to_one() {
        // e^{-i X pi/2} |0> = -i |1>.
        let x = CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let u = matrix_exp_i(&x, std::f64::consts::FRAC_PI_2).unwrap();
        let out = u.matvec(&[Complex64::new(1.0, 0.0), ZERO]);
        let want = [ZERO, Complex64::new(0.0, -1.0)];
        assert!(vec_norm(&vec_sub(&out, &want)) < 1e-12);
        assert!(u.unitarity_error() < 1e-10);
    }

    #[test]
    fn exp_at_zero_time_is_identity() {
        let z = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).unwrap();
        let u = matrix_exp_i(&z, 0.0).unwrap();
        assert!(u.sub(&CMatrix::identity(2)).fro_norm() < 1e-14);
    }

    #[test]
    fn exp_of_pauli_z_at_pi_is_minus_identity() {
        let z = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).unwrap();
        let u = matrix_exp_i(&z, std::f64::consts::PI).unwrap();
        let minus_i2 = CMatrix::identity(2).scale(Complex64::new(-1.0, 0.0));
        assert!(u.sub(&minus_i2).fro_norm() < 1e-12);
    }

    #[test]
    fn eig_and_svd_paths_agree_on_psd_input() {
        // For Hermitian PSD A the eigen- and singular decompositions coincide.
        use rand::SeedableRng;
        use rand_distr::{Distribution, StandardNormal};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(3);
        let g = CMatrix::from_fn(5, 5, |_, _| {
            Complex64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng))
        });
        let psd = g.dagger().matmul(&g);
        let f = |x: f64| Complex64::new((1.0 + x).sqrt(), 0.0);
        let via_eig = matrix_function(&psd, f).unwrap();
        let via_svd = singular_function(&psd, SingularSide::Right, f).unwrap();
        assert!(via_eig.sub(&via_svd).fro_norm() < 1e-9 * psd.fro_norm().max(1.0));
    }
}
