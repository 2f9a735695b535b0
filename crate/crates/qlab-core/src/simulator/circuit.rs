use super::gate::{Gate, GateOp};
use super::state::QuantumState;
use super::MAX_QUBITS;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, ZERO};

/// Ordered list of gate operations on `n` qubits. Time flows left to right:
/// `ops[0]` is applied first.
#[derive(Debug, Clone)]
pub struct Circuit {
    n: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_QUBITS, "qubit count {} exceeds cap {}", n, MAX_QUBITS);
        Circuit { n, ops: Vec::new() }
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn push(&mut self, op: GateOp) -> Result<&mut Self> {
        op.validate(self.n)?;
        self.ops.push(op);
        Ok(self)
    }

    pub fn gate(&mut self, gate: Gate, target: usize) -> &mut Self {
        self.push(GateOp::new(gate, vec![target])).expect("invalid gate op");
        self
    }

    pub fn h(&mut self, q: usize) -> &mut Self {
        self.gate(Gate::H, q)
    }

    pub fn x(&mut self, q: usize) -> &mut Self {
        self.gate(Gate::X, q)
    }

    pub fn z(&mut self, q: usize) -> &mut Self {
        self.gate(Gate::Z, q)
    }

    pub fn rz(&mut self, theta: f64, q: usize) -> &mut Self {
        self.gate(Gate::Rz(theta), q)
    }

    pub fn ry(&mut self, theta: f64, q: usize) -> &mut Self {
        self.gate(Gate::Ry(theta), q)
    }

    pub fn cnot(&mut self, control: usize, target: usize) -> &mut Self {
        self.push(GateOp::new(Gate::Cnot, vec![control, target])).expect("invalid cnot");
        self
    }

    pub fn swap(&mut self, a: usize, b: usize) -> &mut Self {
        self.push(GateOp::new(Gate::Swap, vec![a, b])).expect("invalid swap");
        self
    }

    pub fn toffoli(&mut self, c1: usize, c2: usize, target: usize) -> &mut Self {
        self.push(GateOp::new(Gate::Toffoli, vec![c1, c2, target])).expect("invalid toffoli");
        self
    }

    pub fn custom(&mut self, matrix: CMatrix, targets: Vec<usize>) -> Result<&mut Self> {
        self.push(GateOp::new(Gate::Custom(matrix), targets))?;
        Ok(self)
    }

    /// Controlled application of `gate` with the given control polarities.
    pub fn controlled(
        &mut self,
        gate: Gate,
        targets: Vec<usize>,
        controls: Vec<(usize, bool)>,
    ) -> Result<&mut Self> {
        self.push(GateOp::with_controls(gate, targets, controls))?;
        Ok(self)
    }

    pub fn append(&mut self, other: &Circuit) -> Result<&mut Self> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch { left: other.n, right: self.n });
        }
        self.ops.extend(other.ops.iter().cloned());
        Ok(self)
    }

    /// Inverse circuit: reversed order, conjugated gates.
    pub fn dagger(&self) -> Circuit {
        Circuit { n: self.n, ops: self.ops.iter().rev().map(GateOp::dagger).collect() }
    }

    /// Apply the circuit, returning the evolved state.
    pub fn apply(&self, state: &QuantumState) -> Result<QuantumState> {
        if state.n_qubits() != self.n {
            return Err(Error::DimensionMismatch { left: state.n_qubits(), right: self.n });
        }
        let mut out = state.clone();
        for op in &self.ops {
            apply_op(op, &mut out);
        }
        Ok(out)
    }

    /// Dense unitary of the whole circuit, built by applying it to every
    /// basis state.
    pub fn unitary(&self) -> Result<CMatrix> {
        if self.n > MAX_QUBITS {
            return Err(Error::DimensionCap { dim: 1 << self.n, cap: 1 << MAX_QUBITS });
        }
        let dim = 1usize << self.n;
        let mut u = CMatrix::zeros(dim, dim);
        for j in 0..dim {
            let col = self.apply(&QuantumState::basis(self.n, j))?;
            for (i, a) in col.amplitudes().iter().enumerate() {
                u[(i, j)] = *a;
            }
        }
        Ok(u)
    }
}

/// In-place stride application of one gate operation.
pub(crate) fn apply_op(op: &GateOp, state: &mut QuantumState) {
    let n = state.n_qubits();
    let dim = 1usize << n;
    let k = op.targets.len();
    let sub = 1usize << k;
    // Gate target j carries gate-matrix bit (k-1-j); qubit q carries state
    // bit (n-1-q).
    let target_pos: Vec<usize> = op.targets.iter().map(|&q| n - 1 - q).collect();
    let target_mask: usize = target_pos.iter().map(|&p| 1usize << p).sum();
    let control_mask: usize = op.controls.iter().map(|&(q, _)| 1usize << (n - 1 - q)).sum();
    let control_value: usize = op
        .controls
        .iter()
        .filter(|&&(_, pol)| pol)
        .map(|&(q, _)| 1usize << (n - 1 - q))
        .sum();

    // Offsets of all 2^k target-bit patterns relative to a group base index.
    let offsets: Vec<usize> = (0..sub)
        .map(|p| {
            let mut off = 0usize;
            for (j, &pos) in target_pos.iter().enumerate() {
                if (p >> (k - 1 - j)) & 1 == 1 {
                    off |= 1 << pos;
                }
            }
            off
        })
        .collect();

    let m = op.gate.matrix();
    let amps = state.amplitudes_mut();
    let mut buf = vec![ZERO; sub];

    for base in 0..dim {
        if base & target_mask != 0 || base & control_mask != control_value {
            continue;
        }
        for (p, &off) in offsets.iter().enumerate() {
            buf[p] = amps[base | off];
        }
        for (r, &off) in offsets.iter().enumerate() {
            let mut acc = ZERO;
            for (col, b) in buf.iter().enumerate() {
                let e = m[(r, col)];
                if e != ZERO {
                    acc += e * b;
                }
            }
            amps[base | off] = acc;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{vec_norm, vec_sub};
    use num_complex::Complex64;

    #[test]
    fn hadamard_makes_plus() {
        let mut c = Circuit::new(1);
        c.h(0);
        let out = c.apply(&QuantumState::zero(1)).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(vec_norm(&vec_sub(out.amplitudes(), &[Complex64::new(s, 0.0), Complex64::new(s, 0.0)])) < 1e-12);
    }

    #[test]
    fn cnot_copies_classical_bits() {
        for x in [0usize, 1] {
            let mut c = Circuit::new(2);
            c.cnot(0, 1);
            let input = QuantumState::basis(2, x << 1);
            let out = c.apply(&input).unwrap();
            let expect = (x << 1) | x;
            assert!((out.probability(expect) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn bell_state_from_h_cnot() {
        let mut c = Circuit::new(2);
        c.h(0).cnot(0, 1);
        let out = c.apply(&QuantumState::zero(2)).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let want = [Complex64::new(s, 0.0), ZERO, ZERO, Complex64::new(s, 0.0)];
        assert!(vec_norm(&vec_sub(out.amplitudes(), &want)) < 1e-12);
    }

    #[test]
    fn empty_circuit_unitary_is_identity() {
        let c = Circuit::new(2);
        assert!(c.unitary().unwrap().sub(&CMatrix::identity(4)).fro_norm() < 1e-14);
    }

    #[test]
    fn x_on_qubit_zero_is_x_kron_i() {
        let mut c = Circuit::new(2);
        c.x(0);
        let u = c.unitary().unwrap();
        let x = Gate::X.matrix();
        let want = x.kron(&CMatrix::identity(2));
        assert!(u.sub(&want).fro_norm() < 1e-14);
        // (X (x) I)|00> = |10>
        let out = c.apply(&QuantumState::zero(2)).unwrap();
        assert!((out.probability(2) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn swap_gate_matches_custom_matrix() {
        let mut a = Circuit::new(2);
        a.swap(0, 1);
        let mut b = Circuit::new(2);
        b.custom(Gate::Swap.matrix(), vec![0, 1]).unwrap();
        assert!(a.unitary().unwrap().sub(&b.unitary().unwrap()).fro_norm() < 1e-12);
    }

    #[test]
    fn zero_polarity_control() {
        // X on qubit 1, active when qubit 0 is |0>.
        let mut c = Circuit::new(2);
        c.controlled(Gate::X, vec![1], vec![(0, false)]).unwrap();
        let out = c.apply(&QuantumState::zero(2)).unwrap();
        assert!((out.probability(1) - 1.0).abs() < 1e-12);
        let out = c.apply(&QuantumState::basis(2, 2)).unwrap();
        assert!((out.probability(2) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dagger_inverts() {
        let mut c = Circuit::new(2);
        c.h(0).rz(0.3, 1).cnot(0, 1).gate(Gate::T, 0);
        let u = c.unitary().unwrap();
        let udag = c.dagger().unitary().unwrap();
        assert!(u.matmul(&udag).sub(&CMatrix::identity(4)).fro_norm() < 1e-12);
    }

    #[test]
    fn norm_preserved_by_random_circuits() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(99);
        for _ in 0..50 {
            let n = rng.random_range(1..=4);
            let mut c = Circuit::new(n);
            for _ in 0..20 {
                match rng.random_range(0..4) {
                    0 => {
                        let q = rng.random_range(0..n);
                        c.h(q);
                    }
                    1 => {
                        let q = rng.random_range(0..n);
                        c.rz(rng.random_range(-3.0..3.0), q);
                    }
                    2 => {
                        let q = rng.random_range(0..n);
                        c.ry(rng.random_range(-3.0..3.0), q);
                    }
                    _ => {
                        if n >= 2 {
                            let a = rng.random_range(0..n);
                            let b = (a + 1 + rng.random_range(0..n - 1)) % n;
                            c.cnot(a, b);
                        }
                    }
                }
            }
            let out = c.apply(&QuantumState::zero(n)).unwrap();
            assert!((out.norm() - 1.0).abs() < 1e-10);
        }
    }
}
