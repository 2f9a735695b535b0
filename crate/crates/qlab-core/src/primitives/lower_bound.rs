use crate::linalg::{qr_unitary, vec_norm, vec_sub, CMatrix};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Separation trajectory `D_0, ..., D_k` of the search lower-bound
/// experiment: alternate random unitaries with the marked-state reflection
/// for every marked state simultaneously and track
/// `D_j = sum_{x0} || |psi_j^{x0}> - |psi_j> ||^2`.
///
/// Every trajectory satisfies `sqrt(D_{j+1}) <= sqrt(D_j) + 2`, hence
/// `D_k <= 4 k^2`.
pub fn lower_bound_trajectory(n: usize, k: usize, seed: u64) -> Vec<f64> {
    let dim = 1usize << n;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let norm = 1.0 / (dim as f64).sqrt();
    let psi0: Vec<Complex64> = vec![Complex64::new(norm, 0.0); dim];

    let mut fake = psi0.clone();
    let mut real: Vec<Vec<Complex64>> = vec![psi0.clone(); dim];
    let mut ds = vec![0.0f64];

    for _ in 0..k {
        let u: CMatrix = qr_unitary(dim, &mut rng);
        for (x0, state) in real.iter_mut().enumerate() {
            // R_{x0} then U.
            state[x0] = -state[x0];
            *state = u.matvec(state);
        }
        fake = u.matvec(&fake);
        let d: f64 = real.iter().map(|s| vec_norm(&vec_sub(s, &fake)).powi(2)).sum();
        ds.push(d);
    }
    ds
}

/// Final separation `D_k` of the lower-bound experiment.
pub fn lower_bound_experiment(n: usize, k: usize, seed: u64) -> f64 {
    *lower_bound_trajectory(n, k, seed).last().unwrap()
}
