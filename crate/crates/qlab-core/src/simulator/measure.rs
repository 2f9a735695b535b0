use super::state::QuantumState;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, CMatrix, ZERO};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Density operator of a (sub)system.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    pub matrix: CMatrix,
}

impl DensityMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// Trace-1, Hermitian, positive-semidefinite checks at the given tolerance.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let tr = self.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(Error::NotNormalized { norm: tr.re });
        }
        self.matrix.check_hermitian(tol)?;
        let eig = hermitian_eig(&self.matrix)?;
        if eig.eigenvalues[0] < -tol {
            return Err(Error::SpectrumOutOfRange {
                reason: format!("density operator eigenvalue {} < 0", eig.eigenvalues[0]),
            });
        }
        Ok(())
    }

    pub fn expectation(&self, observable: &CMatrix) -> Complex64 {
        observable.matmul(&self.matrix).trace()
    }
}

/// Exact marginal distribution over the listed qubits (probability of each
/// outcome bitstring, indexed as an integer in qubit-list order).
pub fn marginal_distribution(state: &QuantumState, qubits: &[usize]) -> Vec<f64> {
    let k = qubits.len();
    let mut probs = vec![0.0f64; 1 << k];
    for (idx, amp) in state.amplitudes().iter().enumerate() {
        if *amp == ZERO {
            continue;
        }
        let mut outcome = 0usize;
        for (pos, &q) in qubits.iter().enumerate() {
            outcome |= state.bit(idx, q) << (k - 1 - pos);
        }
        probs[outcome] += amp.norm_sqr();
    }
    probs
}

/// Measure the listed qubits in the computational basis.
///
/// The outcome is sampled from the exact marginal distribution with a PRNG
/// seeded by `seed`; the collapsed state is renormalized. Returns the
/// outcome bits (in the order the qubits were listed), the collapsed state
/// and the exact probability of the sampled outcome.
pub fn measure(
    state: &QuantumState,
    qubits: &[usize],
    seed: u64,
) -> Result<(Vec<u8>, QuantumState, f64)> {
    if !state.is_normalized() {
        return Err(Error::NotNormalized { norm: state.norm() });
    }
    for &q in qubits {
        if q >= state.n_qubits() {
            return Err(Error::QubitIndexOutOfRange { index: q, n: state.n_qubits() });
        }
    }
    let probs = marginal_distribution(state, qubits);
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let outcome = sample_index(&probs, &mut rng);
    let k = qubits.len();
    let bits: Vec<u8> = (0..k).map(|pos| ((outcome >> (k - 1 - pos)) & 1) as u8).collect();
    let (collapsed, p) = project(state, qubits, &bits)?;
    Ok((bits, collapsed, p))
}

/// Draw `shots` independent outcomes from a probability vector with a
/// seeded PRNG.
pub fn sample_outcomes(probs: &[f64], shots: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    (0..shots).map(|_| sample_index(probs, &mut rng)).collect()
}

pub(crate) fn sample_index(probs: &[f64], rng: &mut impl Rng) -> usize {
    let total: f64 = probs.iter().sum();
    let draw: f64 = rng.random::<f64>() * total;
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if draw < acc {
            return i;
        }
    }
    probs.len() - 1
}

fn project(state: &QuantumState, qubits: &[usize], outcome: &[u8]) -> Result<(QuantumState, f64)> {
    let n = state.n_qubits();
    let mut kept = vec![ZERO; state.dim()];
    let mut p = 0.0f64;
    for (idx, amp) in state.amplitudes().iter().enumerate() {
        let matches = qubits
            .iter()
            .zip(outcome)
            .all(|(&q, &b)| state.bit(idx, q) == b as usize);
        if matches {
            kept[idx] = *amp;
            p += amp.norm_sqr();
        }
    }
    if p < 1e-14 {
        return Err(Error::ZeroProbabilityBranch { probability: p });
    }
    let scale = Complex64::new(1.0 / p.sqrt(), 0.0);
    for a in kept.iter_mut() {
        *a *= scale;
    }
    Ok((QuantumState::from_raw(n, kept, true), p))
}

/// Project the listed qubits onto a fixed outcome and renormalize.
/// Returns the post-selected state and the exact branch probability.
pub fn postselect(
    state: &QuantumState,
    qubits: &[usize],
    outcome: &[u8],
) -> Result<(QuantumState, f64)> {
    if !state.is_normalized() {
        return Err(Error::NotNormalized { norm: state.norm() });
    }
    if qubits.len() != outcome.len() {
        return Err(Error::DimensionMismatch { left: qubits.len(), right: outcome.len() });
    }
    for &q in qubits {
        if q >= state.n_qubits() {
            return Err(Error::QubitIndexOutOfRange { index: q, n: state.n_qubits() });
        }
    }
    project(state, qubits, outcome)
}

/// Reduced density operator of the kept qubits; the subsystem ordering
/// follows the `keep` list.
pub fn partial_trace(state: &QuantumState, keep: &[usize]) -> Result<DensityMatrix> {
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let n = state.n_qubits();
    for &q in keep {
        if q >= n {
            return Err(Error::QubitIndexOutOfRange { index: q, n });
        }
    }
    let k = keep.len();
    let keep_set: std::collections::HashSet<usize> = keep.iter().copied().collect();
    let traced: Vec<usize> = (0..n).filter(|q| !keep_set.contains(q)).collect();
    let dim_keep = 1usize << k;
    let dim_traced = 1usize << traced.len();

    // rho[i][j] = sum_rest psi[i, rest] conj(psi[j, rest])
    let mut rho = CMatrix::zeros(dim_keep, dim_keep);
    let full_index = |kept_bits: usize, rest_bits: usize| -> usize {
        let mut idx = 0usize;
        for (pos, &q) in keep.iter().enumerate() {
            idx |= ((kept_bits >> (k - 1 - pos)) & 1) << (n - 1 - q);
        }
        for (pos, &q) in traced.iter().enumerate() {
            idx |= ((rest_bits >> (traced.len() - 1 - pos)) & 1) << (n - 1 - q);
        }
        idx
    };
    let amps = state.amplitudes();
    for i in 0..dim_keep {
        for j in 0..dim_keep {
            let mut acc = ZERO;
            for r in 0..dim_traced {
                acc += amps[full_index(i, r)] * amps[full_index(j, r)].conj();
            }
            rho[(i, j)] = acc;
        }
    }
    Ok(DensityMatrix { matrix: rho })
}
