use crate::error::{Error, Result};
use crate::linalg::{CMatrix, UNITARY_TOL};
use crate::simulator::{marginal_distribution, Circuit, Gate, QuantumState};

/// Hadamard test: exact probability of measuring 0 on the ancilla.
///
/// Real mode gives `p(0) = (1 + Re<psi|U|psi>)/2`; imaginary mode (an extra
/// `S^dag` on the ancilla) gives `p(0) = (1 + Im<psi|U|psi>)/2`. The
/// probability is read off the simulated circuit, not sampled.
pub fn hadamard_test(u: &CMatrix, psi: &QuantumState, imaginary: bool) -> Result<f64> {
    u.check_unitary(UNITARY_TOL)?;
    let n = psi.n_qubits();
    if u.rows() != 1 << n {
        return Err(Error::DimensionMismatch { left: u.rows(), right: 1 << n });
    }
    let mut c = Circuit::new(n + 1);
    c.h(0);
    if imaginary {
        c.gate(Gate::Sdg, 0);
    }
    c.controlled(Gate::Custom(u.clone()), (1..=n).collect(), vec![(0, true)])?;
    c.h(0);
    let input = QuantumState::basis(1, 0).tensor(psi);
    let out = c.apply(&input)?;
    Ok(marginal_distribution(&out, &[0])[0])
}

/// Swap test: exact `p(0) = (1 + |<phi|psi>|^2) / 2` via a controlled
/// register swap.
pub fn swap_test(phi: &QuantumState, psi: &QuantumState) -> Result<f64> {
    if phi.n_qubits() != psi.n_qubits() {
        return Err(Error::DimensionMismatch { left: phi.n_qubits(), right: psi.n_qubits() });
    }
    let n = phi.n_qubits();
    let mut c = Circuit::new(2 * n + 1);
    c.h(0);
    for q in 0..n {
        c.controlled(Gate::Swap, vec![1 + q, 1 + n + q], vec![(0, true)])?;
    }
    c.h(0);
    let input = QuantumState::basis(1, 0).tensor(phi).tensor(psi);
    let out = c.apply(&input)?;
    Ok(marginal_distribution(&out, &[0])[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::inner;

    #[test]
    fn x_expectation_on_zero_is_half() {
        let p0 = hadamard_test(&Gate::X.matrix(), &QuantumState::zero(1), false).unwrap();
        assert!((p0 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn z_expectation_on_zero_is_one() {
        let p0 = hadamard_test(&Gate::Z.matrix(), &QuantumState::zero(1), false).unwrap();
        assert!((p0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn swap_test_of_identical_and_orthogonal_states() {
        let a = QuantumState::zero(2);
        assert!((swap_test(&a, &a).unwrap() - 1.0).abs() < 1e-12);
        let b = QuantumState::basis(2, 3);
        assert!((swap_test(&a, &b).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn real_and_imaginary_parts_reconstruct_the_expectation() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(23);
        let u = crate::linalg::qr_unitary(4, &mut rng);
        let mut prep = Circuit::new(2);
        prep.h(0).ry(0.8, 1).cnot(0, 1);
        let psi = prep.apply(&QuantumState::zero(2)).unwrap();
        let pr = hadamard_test(&u, &psi, false).unwrap();
        let pi = hadamard_test(&u, &psi, true).unwrap();
        let expect = inner(psi.amplitudes(), &u.matvec(psi.amplitudes()));
        assert!((2.0 * pr - 1.0 - expect.re).abs() < 1e-12);
        assert!((2.0 * pi - 1.0 - expect.im).abs() < 1e-12);
        // p_real(0) + p_imag(0) - 1 rebuilds the full complex number.
        let rebuilt = num_complex::Complex64::new(2.0 * pr - 1.0, 2.0 * pi - 1.0);
        assert!((rebuilt - expect).norm() < 1e-12);
    }

    #[test]
    fn non_unitary_rejected() {
        let m = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 2.0]).unwrap();
        assert!(hadamard_test(&m, &QuantumState::zero(1), false).is_err());
    }
}
