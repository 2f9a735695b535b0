use super::MAX_QUBITS;
use crate::error::{Error, Result};
use crate::linalg::{inner, vec_norm, ZERO};
use num_complex::Complex64;

/// Pure state of `n` qubits as a complex amplitude vector of length `2^n`.
#[derive(Debug, Clone)]
pub struct QuantumState {
    n: usize,
    amplitudes: Vec<Complex64>,
    /// States produced by projection carry `false` until renormalized.
    normalized: bool,
}

impl QuantumState {
    /// `|0...0>` on `n` qubits.
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_QUBITS, "qubit count {} exceeds cap {}", n, MAX_QUBITS);
        let mut amplitudes = vec![ZERO; 1 << n];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        QuantumState { n, amplitudes, normalized: true }
    }

    /// Computational basis state with the given index.
    pub fn basis(n: usize, index: usize) -> Self {
        assert!(index < 1 << n);
        let mut s = QuantumState::zero(n);
        s.amplitudes[0] = ZERO;
        s.amplitudes[index] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn from_amplitudes(n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != 1 << n {
            return Err(Error::DimensionMismatch { left: amplitudes.len(), right: 1 << n });
        }
        let norm = vec_norm(&amplitudes);
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm });
        }
        Ok(QuantumState { n, amplitudes, normalized: true })
    }

    pub(crate) fn from_raw(n: usize, amplitudes: Vec<Complex64>, normalized: bool) -> Self {
        QuantumState { n, amplitudes, normalized }
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.amplitudes)
    }

    /// `<self|other>`.
    pub fn overlap(&self, other: &QuantumState) -> Complex64 {
        inner(&self.amplitudes, &other.amplitudes)
    }

    /// `|self> (x) |other>`, self on the more significant qubits.
    pub fn tensor(&self, other: &QuantumState) -> QuantumState {
        let n = self.n + other.n;
        assert!(n <= MAX_QUBITS);
        let mut amplitudes = vec![ZERO; 1 << n];
        for (i, a) in self.amplitudes.iter().enumerate() {
            if *a == ZERO {
                continue;
            }
            for (j, b) in other.amplitudes.iter().enumerate() {
                amplitudes[(i << other.n) | j] = a * b;
            }
        }
        QuantumState { n, amplitudes, normalized: self.normalized && other.normalized }
    }

    /// Probability of measuring the full register in the given basis state.
    pub fn probability(&self, index: usize) -> f64 {
        self.amplitudes[index].norm_sqr()
    }

    /// Bit of qubit `q` inside basis index `index`.
    #[inline]
    pub fn bit(&self, index: usize, q: usize) -> usize {
        (index >> (self.n - 1 - q)) & 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_indexing_is_row_major() {
        // |01> has qubit 0 = 0, qubit 1 = 1 and sits at index 1.
        let s = QuantumState::basis(2, 1);
        assert_eq!(s.bit(1, 0), 0);
        assert_eq!(s.bit(1, 1), 1);
        assert_eq!(s.probability(1), 1.0);
    }

    #[test]
    fn tensor_of_basis_states() {
        let a = QuantumState::basis(1, 1);
        let b = QuantumState::basis(2, 2);
        let ab = a.tensor(&b);
        // |1> (x) |10> = |110> at index 6.
        assert_eq!(ab.probability(6), 1.0);
    }

    #[test]
    fn normalization_enforced() {
        let bad = vec![Complex64::new(0.7, 0.0); 4];
        assert!(QuantumState::from_amplitudes(2, bad).is_err());
    }
}
