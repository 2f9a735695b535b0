use super::bessel::bessel_j_upto;
use super::chebyshev::{ChebyshevPoly, Parity};

/// Truncated expansion of `cos(t x)` and `sin(t x)` in Chebyshev
/// polynomials, both scaled by `1/beta`, together with the worst truncation
/// error `max(|beta C_d(x) - cos(t x)|, |beta S_d(x) - sin(t x)|)` over a
/// 4001-point grid.
#[derive(Debug, Clone)]
pub struct JacobiAnger {
    pub cos_poly: ChebyshevPoly,
    pub sin_poly: ChebyshevPoly,
    pub beta: f64,
    pub truncation_error: f64,
}

/// Build the truncated cosine/sine expansion of degree at most `d`.
///
/// The coefficients are `J_0(t)` and `2 (-1)^k J_{2k}(t)` for the cosine,
/// `2 (-1)^k J_{2k+1}(t)` for the sine. With `beta = None` the scale is
/// chosen automatically as the larger truncated-series max plus `1e-3`,
/// which keeps both polynomials strictly inside `[-1, 1]`.
pub fn jacobi_anger(t: f64, d: usize, beta: Option<f64>) -> JacobiAnger {
    assert!(t >= 0.0, "negative time: fold the sign into the sine series");
    let js = bessel_j_upto(d.max(1), t);

    let mut cos_coeffs = vec![0.0f64; d + 1];
    cos_coeffs[0] = js[0];
    let mut k = 1usize;
    while 2 * k <= d {
        cos_coeffs[2 * k] = 2.0 * if k % 2 == 0 { js[2 * k] } else { -js[2 * k] };
        k += 1;
    }
    let mut sin_coeffs = vec![0.0f64; d + 1];
    let mut k = 0usize;
    while 2 * k + 1 <= d {
        sin_coeffs[2 * k + 1] = 2.0 * if k % 2 == 0 { js[2 * k + 1] } else { -js[2 * k + 1] };
        k += 1;
    }

    let cos_raw = ChebyshevPoly::new(cos_coeffs, Parity::Even).unwrap();
    let sin_raw = ChebyshevPoly::new(sin_coeffs, Parity::Odd).unwrap();
    let beta = beta.unwrap_or_else(|| cos_raw.maxnorm().max(sin_raw.maxnorm()) + 1e-3);

    let cos_poly = cos_raw.scale(1.0 / beta);
    let sin_poly = sin_raw.scale(1.0 / beta);

    let grid = 4001usize;
    let mut err = 0.0f64;
    for i in 0..grid {
        let x = -1.0 + 2.0 * i as f64 / (grid - 1) as f64;
        err = err.max((beta * cos_poly.eval(x) - (t * x).cos()).abs());
        err = err.max((beta * sin_poly.eval(x) - (t * x).sin()).abs());
    }
    JacobiAnger { cos_poly, sin_poly, beta, truncation_error: err }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_24_at_t_4pi_stays_subnormalized() {
        let t = 4.0 * std::f64::consts::PI;
        let ja = jacobi_anger(t, 24, Some(1.001));
        assert!(ja.cos_poly.maxnorm() <= 1.0);
        assert_eq!(ja.cos_poly.parity, Parity::Even);
        assert_eq!(ja.sin_poly.parity, Parity::Odd);
    }

    #[test]
    fn truncation_error_decreases_with_degree() {
        let t = 4.0 * std::f64::consts::PI;
        let lo = jacobi_anger(t, 24, Some(1.001));
        let hi = jacobi_anger(t, 50, Some(1.001));
        assert!(hi.truncation_error < lo.truncation_error);
        assert!(hi.truncation_error < 1e-7, "degree 50 is deep in the convergent regime");
    }

    #[test]
    fn zero_time_collapses_to_constant() {
        let ja = jacobi_anger(0.0, 8, None);
        // cos series = T_0 / beta, sin series = 0.
        assert!((ja.beta * ja.cos_poly.coeffs[0] - 1.0).abs() < 1e-14);
        assert!(ja.cos_poly.coeffs[1..].iter().all(|&c| c.abs() < 1e-14));
        assert!(ja.sin_poly.coeffs.iter().all(|&c| c.abs() < 1e-14));
    }

    #[test]
    fn auto_beta_keeps_polynomials_strictly_inside_unit_ball() {
        let ja = jacobi_anger(7.3, 40, None);
        assert!(ja.cos_poly.maxnorm() < 1.0);
        assert!(ja.sin_poly.maxnorm() < 1.0);
    }
}
