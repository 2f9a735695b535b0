use crate::error::{Error, Result};
use crate::linalg::{CMatrix, UNITARY_TOL};
use num_complex::Complex64;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Gate alphabet. `Rz(theta)` is the phase gate `diag(1, e^{i theta})` and
/// `Ry(theta) = e^{-i theta Y / 2}`; `Custom` carries a dense unitary on one
/// or more target qubits.
#[derive(Debug, Clone)]
pub enum Gate {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Rz(f64),
    Ry(f64),
    Cnot,
    Swap,
    Toffoli,
    Custom(CMatrix),
}

impl Gate {
    /// Number of target qubits the gate acts on.
    pub fn arity(&self) -> usize {
        match self {
            Gate::Cnot => 2,
            Gate::Swap => 2,
            Gate::Toffoli => 3,
            Gate::Custom(m) => {
                let mut k = 0;
                let mut d = m.rows();
                while d > 1 {
                    d >>= 1;
                    k += 1;
                }
                k
            }
            _ => 1,
        }
    }

    /// Dense matrix of the gate on its own targets.
    pub fn matrix(&self) -> CMatrix {
        let c = Complex64::new;
        match self {
            Gate::H => CMatrix::from_real(2, 2, &[FRAC_1_SQRT_2, FRAC_1_SQRT_2, FRAC_1_SQRT_2, -FRAC_1_SQRT_2]).unwrap(),
            Gate::X => CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap(),
            Gate::Y => CMatrix::from_entries(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap(),
            Gate::Z => CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).unwrap(),
            Gate::S => CMatrix::from_entries(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)]).unwrap(),
            Gate::Sdg => CMatrix::from_entries(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)]).unwrap(),
            Gate::T => {
                CMatrix::from_entries(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, std::f64::consts::FRAC_PI_4).exp()]).unwrap()
            }
            Gate::Rz(theta) => {
                CMatrix::from_entries(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, *theta).exp()]).unwrap()
            }
            Gate::Ry(theta) => {
                let (s, co) = (theta / 2.0).sin_cos();
                CMatrix::from_real(2, 2, &[co, -s, s, co]).unwrap()
            }
            Gate::Cnot => {
                CMatrix::from_real(4, 4, &[1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0]).unwrap()
            }
            Gate::Swap => {
                CMatrix::from_real(4, 4, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]).unwrap()
            }
            Gate::Toffoli => CMatrix::from_fn(8, 8, |i, j| {
                let map = |k: usize| if k == 6 { 7 } else if k == 7 { 6 } else { k };
                if map(j) == i { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }
            }),
            Gate::Custom(m) => m.clone(),
        }
    }

    /// Hermitian conjugate of the gate.
    pub fn dagger(&self) -> Gate {
        match self {
            Gate::S => Gate::Sdg,
            Gate::Sdg => Gate::S,
            Gate::T => Gate::Rz(-std::f64::consts::FRAC_PI_4),
            Gate::Rz(theta) => Gate::Rz(-theta),
            Gate::Ry(theta) => Gate::Ry(-theta),
            Gate::Custom(m) => Gate::Custom(m.dagger()),
            other => other.clone(),
        }
    }
}

/// One gate application: targets in gate significance order (first target is
/// the gate's most significant qubit), plus control qubits with polarities
/// (`true` = active on `|1>`).
#[derive(Debug, Clone)]
pub struct GateOp {
    pub gate: Gate,
    pub targets: Vec<usize>,
    pub controls: Vec<(usize, bool)>,
}

impl GateOp {
    pub fn new(gate: Gate, targets: Vec<usize>) -> Self {
        GateOp { gate, targets, controls: Vec::new() }
    }

    pub fn with_controls(gate: Gate, targets: Vec<usize>, controls: Vec<(usize, bool)>) -> Self {
        GateOp { gate, targets, controls }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.targets.len() != self.gate.arity() {
            return Err(Error::DimensionMismatch { left: self.targets.len(), right: self.gate.arity() });
        }
        let mut seen = std::collections::HashSet::new();
        for &t in &self.targets {
            if t >= n {
                return Err(Error::QubitIndexOutOfRange { index: t, n });
            }
            if !seen.insert(t) {
                return Err(Error::QubitIndexOutOfRange { index: t, n });
            }
        }
        for &(cq, _) in &self.controls {
            if cq >= n {
                return Err(Error::QubitIndexOutOfRange { index: cq, n });
            }
            if !seen.insert(cq) {
                return Err(Error::QubitIndexOutOfRange { index: cq, n });
            }
        }
        if let Gate::Custom(m) = &self.gate {
            if !m.is_square() || m.rows() != (1 << self.targets.len()) {
                return Err(Error::DimensionMismatch { left: m.rows(), right: 1 << self.targets.len() });
            }
            m.check_unitary(UNITARY_TOL)?;
        }
        Ok(())
    }

    pub fn dagger(&self) -> GateOp {
        GateOp { gate: self.gate.dagger(), targets: self.targets.clone(), controls: self.controls.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixed_gates_are_unitary() {
        for g in [Gate::H, Gate::X, Gate::Y, Gate::Z, Gate::S, Gate::Sdg, Gate::T, Gate::Rz(0.7), Gate::Ry(1.3), Gate::Cnot, Gate::Swap, Gate::Toffoli] {
            assert!(g.matrix().unitarity_error() < 1e-12, "{g:?}");
            let prod = g.matrix().matmul(&g.dagger().matrix());
            assert!(prod.sub(&CMatrix::identity(prod.rows())).fro_norm() < 1e-12, "{g:?}");
        }
    }

    #[test]
    fn duplicate_targets_rejected() {
        let op = GateOp::new(Gate::Cnot, vec![1, 1]);
        assert!(op.validate(3).is_err());
    }

    #[test]
    fn control_overlapping_target_rejected() {
        let op = GateOp::with_controls(Gate::X, vec![0], vec![(0, true)]);
        assert!(op.validate(2).is_err());
    }
}
