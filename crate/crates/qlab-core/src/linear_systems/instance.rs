use crate::error::{Error, Result};
use crate::linalg::{lu_solve, svd, vec_norm, CMatrix};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceSource {
    Poisson,
    Ode,
    Heat,
    Custom,
}

/// Bookkeeping attached to a linear-system instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QlspMetadata {
    pub source: InstanceSource,
    /// Spatial points per dimension (discretized sources).
    pub grid_points: Option<usize>,
    pub dims: Option<usize>,
    pub dt: Option<f64>,
    pub steps: Option<usize>,
    /// Factor the operator was divided by to reach unit norm.
    pub matrix_scale: f64,
    /// Factor the right-hand side was divided by to reach unit norm.
    pub rhs_scale: f64,
    /// Forward-Euler stability indicator for ODE-derived instances.
    pub stable: Option<bool>,
    /// Condition number of the eigenvector matrix, when known analytically.
    pub kappa_v: Option<f64>,
}

impl QlspMetadata {
    pub fn custom() -> Self {
        QlspMetadata {
            source: InstanceSource::Custom,
            grid_points: None,
            dims: None,
            dt: None,
            steps: None,
            matrix_scale: 1.0,
            rhs_scale: 1.0,
            stable: None,
            kappa_v: None,
        }
    }
}

/// A quantum linear-system instance `A x = b` with a normalized right-hand
/// side, oracle-computed condition number and solution norm.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QlspInstance {
    pub matrix: CMatrix,
    pub rhs: Vec<Complex64>,
    /// `sigma_max / sigma_min` from the SVD oracle.
    pub kappa: f64,
    /// `xi = ||A^{-1} |b>||`.
    pub xi: f64,
    pub metadata: QlspMetadata,
}

impl QlspInstance {
    pub fn new(matrix: CMatrix, rhs: Vec<Complex64>, metadata: QlspMetadata) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        if matrix.rows() != rhs.len() {
            return Err(Error::DimensionMismatch { left: matrix.rows(), right: rhs.len() });
        }
        let norm = vec_norm(&rhs);
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm });
        }
        let s = svd(&matrix)?;
        let smin = *s.singulars.last().unwrap();
        if smin < 1e-13 {
            return Err(Error::PreconditionViolated { reason: "singular instance matrix".into() });
        }
        let kappa = s.singulars[0] / smin;
        let solution = lu_solve(&matrix, &rhs)?;
        let xi = vec_norm(&solution);
        Ok(QlspInstance { matrix, rhs, kappa, xi, metadata })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Classical dense solution `A^{-1} b`.
    pub fn solve(&self) -> Result<Vec<Complex64>> {
        lu_solve(&self.matrix, &self.rhs)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&serde_json::to_value(self)?)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let inst: QlspInstance = serde_json::from_str(text)?;
        Ok(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_computes_kappa_and_xi() {
        let a = CMatrix::from_real(2, 2, &[0.5, 0.0, 0.0, 0.25]).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let rhs = vec![Complex64::new(s, 0.0), Complex64::new(s, 0.0)];
        let inst = QlspInstance::new(a, rhs, QlspMetadata::custom()).unwrap();
        assert!((inst.kappa - 2.0).abs() < 1e-10);
        // A^{-1} b = (2 s, 4 s); norm = s sqrt(20).
        assert!((inst.xi - s * 20.0_f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn unnormalized_rhs_rejected() {
        let a = CMatrix::identity(2);
        let rhs = vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        assert!(QlspInstance::new(a, rhs, QlspMetadata::custom()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = CMatrix::from_real(2, 2, &[0.5, 0.1, 0.1, 0.25]).unwrap();
        let rhs = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let inst = QlspInstance::new(a, rhs, QlspMetadata::custom()).unwrap();
        let text = inst.to_json().unwrap();
        let back = QlspInstance::from_json(&text).unwrap();
        assert_eq!(back.matrix.entries(), inst.matrix.entries());
        assert_eq!(back.kappa, inst.kappa);
    }
}
