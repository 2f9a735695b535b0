use crate::error::{Error, Result};
use crate::simulator::{Circuit, Gate};

/// Largest QFT register we materialize as a circuit.
pub const MAX_QFT_QUBITS: usize = 12;

/// Quantum Fourier transform circuit on `n` qubits, including the final
/// swap network, so that the circuit unitary equals the DFT matrix
/// `(1/sqrt(N)) e^{i 2 pi j k / N}` entrywise. `inverse` builds the
/// Hermitian conjugate.
pub fn qft(n: usize, inverse: bool) -> Result<Circuit> {
    if n == 0 || n > MAX_QFT_QUBITS {
        return Err(Error::DimensionCap { dim: 1 << n, cap: 1 << MAX_QFT_QUBITS });
    }
    let mut c = Circuit::new(n);
    for w in 0..n {
        c.h(w);
        for m in 2..=(n - w) {
            let theta = 2.0 * std::f64::consts::PI / (1u64 << m) as f64;
            c.controlled(Gate::Rz(theta), vec![w], vec![(w + m - 1, true)])?;
        }
    }
    for w in 0..n / 2 {
        c.swap(w, n - 1 - w);
    }
    Ok(if inverse { c.dagger() } else { c })
}

/// Dense DFT matrix used as the oracle for the circuit.
pub fn dft_matrix(n: usize) -> crate::linalg::CMatrix {
    let dim = 1usize << n;
    let norm = 1.0 / (dim as f64).sqrt();
    crate::linalg::CMatrix::from_fn(dim, dim, |k, j| {
        let angle = 2.0 * std::f64::consts::PI * (j as f64) * (k as f64) / dim as f64;
        num_complex::Complex64::new(0.0, angle).exp() * norm
    })
}
