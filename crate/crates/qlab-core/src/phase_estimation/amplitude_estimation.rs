use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::primitives::FlagRegister;
use crate::simulator::{marginal_distribution, sample_outcomes, Circuit, QuantumState};
use num_complex::Complex64;

/// Amplitude estimation: run QPE on the Grover iterate
/// `G = R_psi0 R_good` and convert the modal sampled phase to
/// `p_hat = sin^2(pi k / T)`.
///
/// The additive error obeys
/// `|p_hat - p0| <= sqrt(p0 (1 - p0)) eps' + eps'^2 / 4` with
/// `eps' = 2 pi 2^{-t}` whenever the sampled phase is within one grid step
/// of the Grover angle; the eigenphase pair `e^{+-i theta}` makes both
/// branches land on the same `p_hat`.
pub fn amplitude_estimate(
    prepare: &Circuit,
    flag: FlagRegister,
    t: usize,
    shots: usize,
    seed: u64,
) -> Result<f64> {
    let total = prepare.n_qubits();
    if flag.m > total || flag.m == 0 {
        return Err(Error::BadFlagStructure {
            reason: format!("flag register {} on {} qubits", flag.m, total),
        });
    }
    if shots == 0 {
        return Err(Error::ParameterOutOfRange { reason: "shots = 0".into() });
    }
    let dim = 1usize << total;
    let u_prep = prepare.unitary()?;

    // R_good = (I - 2 Pi) (x) I_n in the flag-first layout.
    let shift = total - flag.m;
    let mut g = CMatrix::zeros(dim, dim);
    for j in 0..dim {
        let sign = if j >> shift == 0 { -1.0 } else { 1.0 };
        g[(j, j)] = Complex64::new(sign, 0.0);
    }
    // R_psi0 = U (2|0><0| - I) U^dag.
    let mut reflect0 = CMatrix::identity(dim).scale(Complex64::new(-1.0, 0.0));
    reflect0[(0, 0)] = Complex64::new(1.0, 0.0);
    let r_psi0 = u_prep.matmul(&reflect0).matmul(&u_prep.dagger());
    let grover = r_psi0.matmul(&g);

    let psi0 = prepare.apply(&QuantumState::zero(total))?;
    let final_state = super::qpe::qpe_final_state(&grover, &psi0, t)?;
    let distribution = marginal_distribution(&final_state, &(0..t).collect::<Vec<_>>());
    let samples = sample_outcomes(&distribution, shots, seed);

    // Modal sampled outcome; ties break toward the smaller k.
    let big_t = 1usize << t;
    let mut counts = vec![0usize; big_t];
    for &s in &samples {
        counts[s] += 1;
    }
    let modal = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(k, _)| k)
        .unwrap();
    let theta_hat = std::f64::consts::PI * modal as f64 / big_t as f64;
    Ok(theta_hat.sin().powi(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_amplitude_within_qpe_bound() {
        // p0 = sin^2(pi/8) via one rotated flag qubit plus a dummy system qubit.
        let p0 = (std::f64::consts::PI / 8.0).sin().powi(2);
        let theta = 2.0 * (std::f64::consts::PI / 2.0 - std::f64::consts::PI / 8.0);
        let mut c = Circuit::new(2);
        c.ry(theta, 0).h(1);
        let t = 7;
        let eps_prime = 2.0 * std::f64::consts::PI / (1u64 << t) as f64;
        let bound = (p0 * (1.0 - p0)).sqrt() * eps_prime + eps_prime * eps_prime / 4.0;
        let mut hits = 0;
        for seed in 0..50u64 {
            let p_hat = amplitude_estimate(&c, FlagRegister { m: 1 }, t, 30, seed).unwrap();
            if (p_hat - p0).abs() <= bound {
                hits += 1;
            }
        }
        assert!(hits >= 40, "only {hits}/50 within the bound");
    }

    #[test]
    fn zero_amplitude_estimates_zero() {
        // Flag qubit always |1>: p0 = 0, theta = 0, outcome 0.
        let mut c = Circuit::new(2);
        c.x(0).h(1);
        let p_hat = amplitude_estimate(&c, FlagRegister { m: 1 }, 5, 10, 1).unwrap();
        assert!(p_hat.abs() < 1e-12);
    }

    #[test]
    fn unit_amplitude_estimates_one() {
        // Flag qubit stays |0>: p0 = 1, theta = pi, p_hat = 1.
        let mut c = Circuit::new(2);
        c.h(1);
        let p_hat = amplitude_estimate(&c, FlagRegister { m: 1 }, 5, 10, 2).unwrap();
        assert!((p_hat - 1.0).abs() < 1e-12);
    }
}
