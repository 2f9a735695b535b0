use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Parity of a polynomial: even, odd, or indefinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    None,
}

/// Real polynomial in the Chebyshev T-basis with a parity tag and a grid
/// estimate of its max-norm on `[-1, 1]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChebyshevPoly {
    /// `coeffs[k]` multiplies `T_k(x)`.
    pub coeffs: Vec<f64>,
    pub parity: Parity,
}

/// Grid used for max-norm estimates: Chebyshev points are within
/// O(1/m^2) of the true extrema for smooth polynomials.
pub const MAXNORM_GRID: usize = 2001;

impl ChebyshevPoly {
    pub fn new(coeffs: Vec<f64>, parity: Parity) -> Result<Self> {
        let p = ChebyshevPoly { coeffs, parity };
        p.check_parity()?;
        Ok(p)
    }

    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        let parity = detect_parity(&coeffs);
        ChebyshevPoly { coeffs, parity }
    }

    pub fn zero(degree: usize, parity: Parity) -> Self {
        ChebyshevPoly { coeffs: vec![0.0; degree + 1], parity }
    }

    /// Degree of the trailing nonzero coefficient (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|&c| c != 0.0)
            .unwrap_or(0)
    }

    /// Formal degree: length of the coefficient list minus one.
    pub fn len_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn check_parity(&self) -> Result<()> {
        let bad = match self.parity {
            Parity::Even => self.coeffs.iter().skip(1).step_by(2).map(|c| c.abs()).fold(0.0, f64::max),
            Parity::Odd => self.coeffs.iter().step_by(2).map(|c| c.abs()).fold(0.0, f64::max),
            Parity::None => 0.0,
        };
        if bad > 1e-14 {
            return Err(Error::ParityMismatch);
        }
        Ok(())
    }

    /// Clenshaw evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        if self.coeffs.is_empty() {
            return 0.0;
        }
        let mut b1 = 0.0f64;
        let mut b2 = 0.0f64;
        for &c in self.coeffs.iter().skip(1).rev() {
            let b0 = 2.0 * x * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        x * b1 - b2 + self.coeffs[0]
    }

    /// Max-norm estimate over the Chebyshev grid of [`MAXNORM_GRID`] points.
    pub fn maxnorm(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..MAXNORM_GRID {
            let x = (std::f64::consts::PI * i as f64 / (MAXNORM_GRID - 1) as f64).cos();
            worst = worst.max(self.eval(x).abs());
        }
        worst
    }

    pub fn scale(&self, c: f64) -> ChebyshevPoly {
        ChebyshevPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect(), parity: self.parity }
    }

    /// Zero out coefficients of the opposite parity (used after numerical
    /// constructions that should be parity-exact).
    pub fn enforce_parity(&mut self) {
        match self.parity {
            Parity::Even => {
                for c in self.coeffs.iter_mut().skip(1).step_by(2) {
                    *c = 0.0;
                }
            }
            Parity::Odd => {
                for c in self.coeffs.iter_mut().step_by(2) {
                    *c = 0.0;
                }
            }
            Parity::None => {}
        }
    }
}

fn detect_parity(coeffs: &[f64]) -> Parity {
    let odd_mass: f64 = coeffs.iter().skip(1).step_by(2).map(|c| c.abs()).sum();
    let even_mass: f64 = coeffs.iter().step_by(2).map(|c| c.abs()).sum();
    if odd_mass <= 1e-14 {
        Parity::Even
    } else if even_mass <= 1e-14 {
        Parity::Odd
    } else {
        Parity::None
    }
}

/// Chebyshev interpolation of `f` at the `d+1` extrema points
/// `cos(pi j / d)`, returning T-basis coefficients (degree `d`).
pub fn interpolate(f: impl Fn(f64) -> f64, d: usize) -> Vec<f64> {
    let n = d;
    let pts: Vec<f64> = (0..=n).map(|j| (std::f64::consts::PI * j as f64 / n as f64).cos()).collect();
    let vals: Vec<f64> = pts.iter().map(|&x| f(x)).collect();
    // Discrete cosine transform (type I) with trapezoid end weights.
    let mut coeffs = vec![0.0f64; n + 1];
    for (k, ck) in coeffs.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (j, &v) in vals.iter().enumerate() {
            let w = if j == 0 || j == n { 0.5 } else { 1.0 };
            acc += w * v * (std::f64::consts::PI * (k * j) as f64 / n as f64).cos();
        }
        let norm = if k == 0 || k == n { 1.0 } else { 2.0 };
        *ck = norm * acc / n as f64;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clenshaw_matches_cos_identity() {
        // T_k(cos t) = cos(k t).
        let p = ChebyshevPoly::from_coeffs(vec![0.0, 0.0, 0.0, 1.0]);
        for i in 0..50 {
            let t = 0.1 + 0.05 * i as f64;
            assert!((p.eval(t.cos()) - (3.0 * t).cos()).abs() < 1e-12);
        }
        assert_eq!(p.parity, Parity::Odd);
        assert_eq!(p.degree(), 3);
    }

    #[test]
    fn parity_detection_and_enforcement() {
        let p = ChebyshevPoly::from_coeffs(vec![1.0, 0.0, -0.5]);
        assert_eq!(p.parity, Parity::Even);
        assert!(ChebyshevPoly::new(vec![1.0, 0.5], Parity::Even).is_err());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // f(x) = x^3 = (3 T_1 + T_3)/4.
        let coeffs = interpolate(|x| x * x * x, 5);
        assert!((coeffs[1] - 0.75).abs() < 1e-12);
        assert!((coeffs[3] - 0.25).abs() < 1e-12);
        for k in [0usize, 2, 4, 5] {
            assert!(coeffs[k].abs() < 1e-12);
        }
    }

    #[test]
    fn maxnorm_bounds_grid_values() {
        let p = ChebyshevPoly::from_coeffs(vec![0.0, 0.8]);
        assert!((p.maxnorm() - 0.8).abs() < 1e-12);
    }
}
