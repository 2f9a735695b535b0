use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::simulator::{marginal_distribution, Circuit, Gate, QuantumState};
use num_complex::Complex64;
use std::collections::BTreeSet;

/// Unstructured search instance: `n` qubits with a nonempty set of marked
/// basis states, accessed through the phase-flip reflection
/// `R = I - 2 sum |x0><x0|`.
#[derive(Debug, Clone)]
pub struct SearchProblem {
    pub n: usize,
    pub marked: BTreeSet<usize>,
}

impl SearchProblem {
    pub fn new(n: usize, marked: impl IntoIterator<Item = usize>) -> Result<Self> {
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        if marked.is_empty() {
            return Err(Error::ParameterOutOfRange { reason: "no marked states".into() });
        }
        if let Some(&worst) = marked.iter().max() {
            if worst >= (1 << n) {
                return Err(Error::IndexOutOfRange { index: worst, limit: 1 << n });
            }
        }
        Ok(SearchProblem { n, marked })
    }

    /// Rotation angle `theta = 2 arcsin sqrt(M/N)`.
    pub fn theta(&self) -> f64 {
        let frac = self.marked.len() as f64 / (1u64 << self.n) as f64;
        2.0 * frac.sqrt().asin()
    }

    /// Dense reflection `I - 2 sum_{x0} |x0><x0|`.
    pub fn marked_reflection_dense(&self) -> CMatrix {
        let mut r = CMatrix::identity(1 << self.n);
        for &x0 in &self.marked {
            r[(x0, x0)] = Complex64::new(-1.0, 0.0);
        }
        r
    }
}

/// Outcome of a simulated Grover run. `success_prob` is the simulated
/// probability of measuring a marked state; the closed form is
/// `sin^2((2k+1) theta / 2)`.
#[derive(Debug, Clone)]
pub struct GroverRun {
    pub k: usize,
    pub theta: f64,
    pub success_prob: f64,
}

impl GroverRun {
    pub fn closed_form(&self) -> f64 {
        ((2.0 * self.k as f64 + 1.0) * self.theta / 2.0).sin().powi(2)
    }
}

/// Iteration count `round(pi / (2 theta) - 1/2)` that maximizes the success
/// probability.
pub fn recommended_iterations(theta: f64) -> usize {
    (std::f64::consts::PI / (2.0 * theta) - 0.5).round().max(0.0) as usize
}

/// Phase oracle as a circuit on `n + 1` qubits: one multi-controlled X onto
/// the signal qubit (index `n`, prepared in `|->`) per marked state.
pub fn marked_reflection_circuit(problem: &SearchProblem) -> Circuit {
    let n = problem.n;
    let mut c = Circuit::new(n + 1);
    for &x0 in &problem.marked {
        let controls: Vec<(usize, bool)> =
            (0..n).map(|q| (q, (x0 >> (n - 1 - q)) & 1 == 1)).collect();
        c.controlled(Gate::X, vec![n], controls).expect("valid oracle controls");
    }
    c
}

/// Diffusion operator `R_psi0 = 2 |psi0><psi0| - I` on `n + 1` qubits using
/// the `|->` signal for the phase kickback: X on the signal makes the global
/// sign, and a zero-controlled X marks `|0^n>` between Hadamard layers.
pub fn uniform_reflection_circuit(n: usize) -> Circuit {
    let mut c = Circuit::new(n + 1);
    c.x(n);
    for q in 0..n {
        c.h(q);
    }
    let controls: Vec<(usize, bool)> = (0..n).map(|q| (q, false)).collect();
    c.controlled(Gate::X, vec![n], controls).expect("valid diffusion controls");
    for q in 0..n {
        c.h(q);
    }
    c
}

/// Dense Grover iterate `G = R_psi0 R_marked` on the system register alone.
pub fn grover_operator_dense(problem: &SearchProblem) -> CMatrix {
    let dim = 1 << problem.n;
    let norm = 1.0 / (dim as f64).sqrt();
    let psi0: Vec<Complex64> = vec![Complex64::new(norm, 0.0); dim];
    let r_psi0 = CMatrix::outer(&psi0, &psi0)
        .scale(Complex64::new(2.0, 0.0))
        .sub(&CMatrix::identity(dim));
    r_psi0.matmul(&problem.marked_reflection_dense())
}

/// Simulate `G^k` applied to the uniform superposition, gate by gate, and
/// report the probability of landing in the marked set.
pub fn grover_search(problem: &SearchProblem, k: usize) -> Result<GroverRun> {
    let n = problem.n;
    let mut c = Circuit::new(n + 1);
    // Signal |->, system uniform.
    c.x(n).h(n);
    for q in 0..n {
        c.h(q);
    }
    let oracle = marked_reflection_circuit(problem);
    let diffusion = uniform_reflection_circuit(n);
    for _ in 0..k {
        c.append(&oracle)?;
        c.append(&diffusion)?;
    }
    let state = c.apply(&QuantumState::zero(n + 1))?;
    let probs = marginal_distribution(&state, &(0..n).collect::<Vec<_>>());
    let success_prob = problem.marked.iter().map(|&x| probs[x]).sum();
    Ok(GroverRun { k, theta: problem.theta(), success_prob })
}
