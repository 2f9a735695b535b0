use super::chebyshev::{interpolate, ChebyshevPoly, Parity};
use crate::error::{Error, Result};
use crate::linalg::{lu_solve, CMatrix};
use num_complex::Complex64;

/// erf via its Maclaurin series for small arguments and the continued
/// asymptotic tail otherwise; absolute accuracy around 1e-13, far below the
/// approximation errors certified here.
pub fn erf(x: f64) -> f64 {
    let ax = x.abs();
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    if ax < 3.0 {
        let mut term = ax;
        let mut sum = ax;
        let x2 = ax * ax;
        let mut k = 0usize;
        loop {
            k += 1;
            term *= -x2 / k as f64;
            let contrib = term / (2 * k + 1) as f64;
            sum += contrib;
            if contrib.abs() < 1e-18 * sum.abs().max(1e-30) || k > 200 {
                break;
            }
        }
        sign * sum * 2.0 / std::f64::consts::PI.sqrt()
    } else {
        // erfc(x) = e^{-x^2}/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - ...)
        let x2 = ax * ax;
        let mut term = 1.0f64;
        let mut sum = 1.0f64;
        for k in 1..12 {
            term *= -(2.0 * k as f64 - 1.0) / (2.0 * x2);
            sum += term;
        }
        let erfc = (-x2).exp() / (ax * std::f64::consts::PI.sqrt()) * sum;
        sign * (1.0 - erfc)
    }
}

/// Inverse complementary error function (bisection; used only to pick
/// mollifier sharpness, so moderate accuracy suffices).
fn erfc_inv(y: f64) -> f64 {
    assert!(y > 0.0 && y < 1.0);
    let mut lo = 0.0f64;
    let mut hi = 10.0f64;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if 1.0 - erf(mid) > y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// What to approximate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TargetKind {
    /// Odd approximation to sign(x), accurate outside `(-delta, delta)`.
    Sign { delta: f64 },
    /// Even approximation to the descending step: 1 on `[0, a]`, 0 on `[b, 1]`.
    Step { a: f64, b: f64 },
    /// Odd approximation to `delta / (beta x)` on `[delta, 1]`, `delta = 1/kappa`.
    Inverse { kappa: f64, beta: f64 },
}

/// A constructed target polynomial together with its certified uniform
/// error on the working region (grid maximum).
#[derive(Debug, Clone)]
pub struct ApproxTarget {
    pub poly: ChebyshevPoly,
    pub achieved_error: f64,
}

/// Build a parity-correct polynomial approximation of the requested kind.
///
/// Sign and step targets interpolate an error-function mollification whose
/// sharpness is set by `accuracy` (the requested uniform error on the
/// working region); the inverse target is a parity-constrained least-squares
/// fit. The achieved error is certified on a dense grid and
/// [`Error::DegreeTooLow`] is raised when the construction is useless
/// (error above 0.5) at the requested degree.
pub fn approx_target(kind: TargetKind, degree: usize, accuracy: Option<f64>) -> Result<ApproxTarget> {
    match kind {
        TargetKind::Sign { delta } => sign_target(delta, degree, accuracy),
        TargetKind::Step { a, b } => step_target(a, b, degree, accuracy),
        TargetKind::Inverse { kappa, beta } => inverse_target(kappa, beta, degree),
    }
}

// Mollifier sharpness trades the erf plateau error erfc(k * band) against
// the degree-d interpolation truncation, which grows with k. The sweep
// below picks the best certified k deterministically; `accuracy`, when
// given, seeds the sweep center.
fn sharpness_candidates(band: f64, degree: usize, accuracy: Option<f64>) -> Vec<f64> {
    let lo = 0.5 / band;
    let hi = 2.0 * degree as f64;
    let steps = 60usize;
    let ratio = (hi / lo).max(1.0);
    let mut ks: Vec<f64> = (0..=steps)
        .map(|i| lo * ratio.powf(i as f64 / steps as f64))
        .collect();
    if let Some(acc) = accuracy {
        ks.push(erfc_inv((acc / 2.0).clamp(1e-14, 0.5)) / band);
    }
    ks
}

fn sign_target(delta: f64, degree: usize, accuracy: Option<f64>) -> Result<ApproxTarget> {
    if degree % 2 == 0 {
        return Err(Error::ParityMismatch);
    }
    if !(0.0..1.0).contains(&delta) || delta == 0.0 {
        return Err(Error::ParameterOutOfRange { reason: format!("sign delta {delta}") });
    }
    let mut best: Option<ApproxTarget> = None;
    for k in sharpness_candidates(delta, degree, accuracy) {
        let mut poly = ChebyshevPoly { coeffs: interpolate(|x| erf(k * x), degree), parity: Parity::Odd };
        poly.enforce_parity();
        rescale_into_unit_ball(&mut poly);
        let err = grid_error(&poly, |_| 1.0, delta, 1.0);
        if best.as_ref().is_none_or(|b| err < b.achieved_error) {
            best = Some(ApproxTarget { poly, achieved_error: err });
        }
    }
    let best = best.unwrap();
    finish(best.poly, best.achieved_error, degree)
}

fn step_target(a: f64, b: f64, degree: usize, accuracy: Option<f64>) -> Result<ApproxTarget> {
    if degree % 2 != 0 {
        return Err(Error::ParityMismatch);
    }
    if !(0.0 <= a && a < b && b <= 1.0) {
        return Err(Error::ParameterOutOfRange { reason: format!("step band [{a},{b}]") });
    }
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut best: Option<ApproxTarget> = None;
    for k in sharpness_candidates(half, degree, accuracy) {
        // Even extension through |x|.
        let f = move |x: f64| 0.5 * (1.0 - erf(k * (x.abs() - center)));
        let mut poly = ChebyshevPoly { coeffs: interpolate(f, degree), parity: Parity::Even };
        poly.enforce_parity();
        rescale_into_unit_ball(&mut poly);
        let err_lo = grid_error(&poly, |_| 1.0, 0.0, a);
        let err_hi = grid_error(&poly, |_| 0.0, b, 1.0);
        let err = err_lo.max(err_hi);
        if best.as_ref().is_none_or(|bst| err < bst.achieved_error) {
            best = Some(ApproxTarget { poly, achieved_error: err });
        }
    }
    let best = best.unwrap();
    finish(best.poly, best.achieved_error, degree)
}

fn inverse_target(kappa: f64, beta: f64, degree: usize) -> Result<ApproxTarget> {
    if degree % 2 == 0 {
        return Err(Error::ParityMismatch);
    }
    if kappa < 1.0 {
        return Err(Error::ParameterOutOfRange { reason: format!("kappa {kappa}") });
    }
    let delta = 1.0 / kappa;
    let n_odd = degree / 2 + 1; // number of odd coefficients
    let m = 2000usize;
    // Least squares of sum_j c_j T_{2j+1}(x) against delta/(beta x) on
    // [delta, 1], solved through the normal equations with a tiny ridge.
    let xs: Vec<f64> = (0..m).map(|i| delta + (1.0 - delta) * (i as f64 + 0.5) / m as f64).collect();
    let mut ata = CMatrix::zeros(n_odd, n_odd);
    let mut atb = vec![Complex64::new(0.0, 0.0); n_odd];
    let mut basis_row = vec![0.0f64; n_odd];
    for &x in &xs {
        let theta = x.acos();
        for (j, col) in basis_row.iter_mut().enumerate() {
            *col = ((2 * j + 1) as f64 * theta).cos();
        }
        let y = delta / (beta * x);
        for i in 0..n_odd {
            for j in 0..n_odd {
                ata[(i, j)] += Complex64::new(basis_row[i] * basis_row[j], 0.0);
            }
            atb[i] += Complex64::new(basis_row[i] * y, 0.0);
        }
    }
    for i in 0..n_odd {
        ata[(i, i)] += Complex64::new(1e-12, 0.0);
    }
    let sol = lu_solve(&ata, &atb)?;
    let mut coeffs = vec![0.0f64; degree + 1];
    for (j, c) in sol.iter().enumerate() {
        coeffs[2 * j + 1] = c.re;
    }
    let poly = ChebyshevPoly { coeffs, parity: Parity::Odd };
    let err = grid_error(&poly, |x| delta / (beta * x), delta, 1.0);
    finish(poly, err, degree)
}

fn rescale_into_unit_ball(poly: &mut ChebyshevPoly) {
    let m = poly.maxnorm();
    if m >= 1.0 {
        let scale = (1.0 - 1e-8) / m;
        for c in poly.coeffs.iter_mut() {
            *c *= scale;
        }
    }
}

fn grid_error(poly: &ChebyshevPoly, f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    if hi <= lo {
        return 0.0;
    }
    let m = 2000usize;
    let mut worst = 0.0f64;
    for i in 0..=m {
        let x = lo + (hi - lo) * i as f64 / m as f64;
        worst = worst.max((poly.eval(x) - f(x)).abs());
    }
    worst
}

fn finish(poly: ChebyshevPoly, err: f64, degree: usize) -> Result<ApproxTarget> {
    if err > 0.5 {
        return Err(Error::DegreeTooLow { degree, achieved: err });
    }
    Ok(ApproxTarget { poly, achieved_error: err })
}
