use super::qft::qft;
use crate::error::{Error, Result};
use crate::linalg::{vec_norm, CMatrix, UNITARY_TOL};
use crate::simulator::{marginal_distribution, sample_outcomes, Circuit, Gate, QuantumState};
use num_complex::Complex64;

/// Result of a phase-estimation run with `t` ancilla bits.
#[derive(Debug, Clone)]
pub struct QpeResult {
    pub t: usize,
    /// `T = 2^t`.
    pub big_t: usize,
    /// Sampled ancilla outcomes `k'`, each estimating `phi ~ k'/T`.
    pub samples: Vec<usize>,
    /// Exact outcome distribution over `k'`.
    pub distribution: Vec<f64>,
    /// Ancilla amplitudes `gamma_{0,k'}` when the input was an eigenvector.
    pub leakage: Option<Vec<Complex64>>,
}

impl QpeResult {
    pub fn modal_outcome(&self) -> usize {
        self.distribution
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(k, _)| k)
            .unwrap()
    }
}

/// Mod-1 distance `min(x mod 1, 1 - x mod 1)`.
pub fn mod1_distance(x: f64) -> f64 {
    let r = x.rem_euclid(1.0);
    r.min(1.0 - r)
}

/// Leakage amplitudes `gamma_{0,k'} = (1/T) sum_j e^{i 2 pi j (phi - k'/T)}`
/// for a single eigenphase, computed by direct summation.
pub fn qpe_gamma(phi: f64, t: usize) -> Vec<Complex64> {
    let big_t = 1usize << t;
    (0..big_t)
        .map(|k| {
            let delta = phi - k as f64 / big_t as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..big_t {
                acc += Complex64::new(0.0, 2.0 * std::f64::consts::PI * j as f64 * delta).exp();
            }
            acc / big_t as f64
        })
        .collect()
}

/// Exact tail probability `sum_{|phi - k'/T|_1 >= eps} |gamma_{0,k'}|^2`,
/// bounded by `1/(2 T eps) + 1/(2 (T eps)^2)`.
pub fn qpe_tail_probability(phi: f64, t: usize, eps: f64) -> f64 {
    let big_t = 1usize << t;
    qpe_gamma(phi, t)
        .iter()
        .enumerate()
        .filter(|(k, _)| mod1_distance(phi - *k as f64 / big_t as f64) >= eps)
        .map(|(_, g)| g.norm_sqr())
        .sum()
}

/// Textbook phase estimation: `t` Hadamard-prepared ancillas, controlled
/// powers `U^{2^j}` (computed by repeated squaring of the dense unitary),
/// inverse QFT, and measurement of the ancilla register.
///
/// `samples` are drawn from the exact outcome distribution with the given
/// seed. When `input` is numerically an eigenvector of `U`, the ancilla
/// amplitudes are returned as the leakage vector.
pub fn qpe(
    u: &CMatrix,
    input: &QuantumState,
    t: usize,
    shots: usize,
    seed: u64,
) -> Result<QpeResult> {
    u.check_unitary(UNITARY_TOL)?;
    if t == 0 || t > 10 {
        return Err(Error::ParameterOutOfRange { reason: format!("ancilla bits {t}") });
    }
    let n = input.n_qubits();
    if u.rows() != 1 << n {
        return Err(Error::DimensionMismatch { left: u.rows(), right: 1 << n });
    }

    let state = qpe_final_state(u, input, t)?;
    let ancillas: Vec<usize> = (0..t).collect();
    let distribution = marginal_distribution(&state, &ancillas);
    let samples = sample_outcomes(&distribution, shots, seed);

    // Leakage: if input is an eigenvector, the system register factors out
    // and the ancilla amplitudes are <k'| (x) <input| psi_final.
    let residual = eigen_residual(u, input);
    let leakage = if residual < 1e-8 {
        let mut gamma = vec![Complex64::new(0.0, 0.0); 1 << t];
        let amps = state.amplitudes();
        let inp = input.amplitudes();
        for (k, g) in gamma.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, a) in inp.iter().enumerate() {
                acc += a.conj() * amps[(k << n) | j];
            }
            *g = acc;
        }
        Some(gamma)
    } else {
        None
    };

    Ok(QpeResult { t, big_t: 1 << t, samples, distribution, leakage })
}

/// The state right before the ancilla measurement.
pub fn qpe_final_state(u: &CMatrix, input: &QuantumState, t: usize) -> Result<QuantumState> {
    let n = input.n_qubits();
    let mut c = Circuit::new(t + n);
    for w in 0..t {
        c.h(w);
    }
    // Ancilla wire w holds bit j_{t-1-w}, controlling U^{2^{t-1-w}}.
    let mut power = u.clone();
    for j in 0..t {
        let wire = t - 1 - j;
        c.controlled(
            Gate::Custom(power.clone()),
            (t..t + n).collect(),
            vec![(wire, true)],
        )?;
        if j + 1 < t {
            power = power.matmul(&power);
        }
    }
    // The inverse QFT acts on the ancilla register, which sits first.
    let iqft = qft(t, true)?;
    for op in iqft.ops() {
        c.push(op.clone())?;
    }
    let full_input = QuantumState::zero(t).tensor(input);
    c.apply(&full_input)
}

pub(crate) fn eigen_residual(u: &CMatrix, v: &QuantumState) -> f64 {
    let uv = u.matvec(v.amplitudes());
    let lambda = crate::linalg::inner(v.amplitudes(), &uv);
    let diff: Vec<Complex64> =
        uv.iter().zip(v.amplitudes()).map(|(a, b)| a - lambda * b).collect();
    vec_norm(&diff)
}

/// Diagonal unitary `e^{i 2 pi phi}` acting trivially: test helper for a
/// single-qubit eigenphase register.
pub fn phase_unitary(phi: f64) -> CMatrix {
    CMatrix::diag(&[
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 2.0 * std::f64::consts::PI * phi).exp(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_four_bit_phase_is_deterministic() {
        // phi = 0.5625 = 9/16: outcome 9 with probability 1.
        let u = phase_unitary(0.5625);
        let input = QuantumState::basis(1, 1);
        let r = qpe(&u, &input, 4, 5, 7).unwrap();
        assert!((r.distribution[9] - 1.0).abs() < 1e-12);
        assert!(r.samples.iter().all(|&k| k == 9));
        let leak = r.leakage.unwrap();
        assert!((leak[9].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_phase_gives_outcome_zero() {
        let u = phase_unitary(0.0);
        let input = QuantumState::basis(1, 1);
        let r = qpe(&u, &input, 5, 3, 0).unwrap();
        assert!((r.distribution[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn leakage_matches_closed_form_gamma() {
        let phi = 0.35;
        let t = 6;
        let u = phase_unitary(phi);
        let input = QuantumState::basis(1, 1);
        let r = qpe(&u, &input, t, 1, 0).unwrap();
        // Modal outcome k' = 22 (phi_tilde = 0.34375).
        assert_eq!(r.modal_outcome(), 22);
        let leak = r.leakage.unwrap();
        let gamma = qpe_gamma(phi, t);
        for (a, b) in leak.iter().zip(&gamma) {
            assert!((a - b).norm() < 1e-10);
        }
        // Normalization.
        let total: f64 = gamma.iter().map(|g| g.norm_sqr()).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tail_probability_respects_bound_and_shrinks_with_t() {
        let phi = 0.35;
        let eps = 1.0 / 16.0;
        let mut previous = f64::INFINITY;
        for t in [6usize, 10] {
            let tail = qpe_tail_probability(phi, t, eps);
            let te = (1usize << t) as f64 * eps;
            assert!(tail <= 1.0 / (2.0 * te) + 1.0 / (2.0 * te * te));
            assert!(tail < previous);
            previous = tail;
        }
        // Exact representable phase has zero tail.
        assert!(qpe_tail_probability(0.25, 4, 0.1) < 1e-20);
    }

    #[test]
    fn superposition_distribution_is_mixture_of_gammas() {
        // U = diag(e^{2 pi i phi_0}, e^{2 pi i phi_1}) with equal-weight input.
        let (phi0, phi1) = (0.15, 0.52);
        let u = CMatrix::diag(&[
            Complex64::new(0.0, 2.0 * std::f64::consts::PI * phi0).exp(),
            Complex64::new(0.0, 2.0 * std::f64::consts::PI * phi1).exp(),
        ]);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let input = QuantumState::from_amplitudes(
            1,
            vec![Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
        )
        .unwrap();
        let t = 5;
        let r = qpe(&u, &input, t, 1, 0).unwrap();
        assert!(r.leakage.is_none());
        let g0 = qpe_gamma(phi0, t);
        let g1 = qpe_gamma(phi1, t);
        for k in 0..(1 << t) {
            let expect = 0.5 * g0[k].norm_sqr() + 0.5 * g1[k].norm_sqr();
            assert!((r.distribution[k] - expect).abs() < 1e-10, "k={k}");
        }
    }

    #[test]
    fn single_ancilla_qpe_is_the_hadamard_test() {
        // t = 1: the QPE circuit is H, controlled-U, H.
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(31);
        let u = crate::linalg::qr_unitary(2, &mut rng);
        let mut qpe_circuit = Circuit::new(2);
        qpe_circuit.h(0);
        qpe_circuit
            .controlled(Gate::Custom(u.clone()), vec![1], vec![(0, true)])
            .unwrap();
        for op in qft(1, true).unwrap().ops() {
            qpe_circuit.push(op.clone()).unwrap();
        }
        let mut hadamard = Circuit::new(2);
        hadamard.h(0);
        hadamard.controlled(Gate::Custom(u), vec![1], vec![(0, true)]).unwrap();
        hadamard.h(0);
        let a = qpe_circuit.unitary().unwrap();
        let b = hadamard.unitary().unwrap();
        assert!(a.sub(&b).max_abs() < 1e-12);
    }
}
