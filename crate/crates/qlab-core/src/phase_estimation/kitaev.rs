use super::qpe::eigen_residual;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, UNITARY_TOL};
use crate::simulator::{marginal_distribution, Circuit, Gate, QuantumState};

/// Fixed-point binary fraction `phi = 0.b_{d-1} ... b_0`; `bits[i]` carries
/// weight `2^{i-d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseFixedPoint {
    pub bits: Vec<u8>,
    pub d: usize,
}

impl PhaseFixedPoint {
    pub fn value(&self) -> f64 {
        self.bits
            .iter()
            .enumerate()
            .map(|(i, &b)| b as f64 * (2.0f64).powi(i as i32 - self.d as i32))
            .sum()
    }

    pub fn from_value(phi: f64, d: usize) -> Self {
        let scaled = (phi.rem_euclid(1.0) * (1u64 << d) as f64).round() as u64 % (1u64 << d);
        let bits = (0..d).map(|i| ((scaled >> i) & 1) as u8).collect();
        PhaseFixedPoint { bits, d }
    }
}

/// Exact cosine/sine probabilities of the Kitaev circuits for `U^{2^j}`,
/// read from the simulated Hadamard tests (no sampling).
fn kitaev_probabilities(u_pow: &CMatrix, eigvec: &QuantumState) -> Result<(f64, f64)> {
    let n = eigvec.n_qubits();
    let run = |with_s: bool| -> Result<f64> {
        let mut c = Circuit::new(n + 1);
        c.h(0);
        if with_s {
            c.gate(Gate::S, 0);
        }
        c.controlled(Gate::Custom(u_pow.clone()), (1..=n).collect(), vec![(0, true)])?;
        c.h(0);
        let input = QuantumState::basis(1, 0).tensor(eigvec);
        let out = c.apply(&input)?;
        Ok(marginal_distribution(&out, &[0])[1])
    };
    // p_cos(1) = (1 - cos(2 pi phi'))/2, p_sin(1) = (1 + sin(2 pi phi'))/2.
    Ok((run(false)?, run(true)?))
}

/// Round `alpha` to the nearest 3-bit fraction (as an integer numerator over
/// 8), rounding exact ties upward.
fn round_to_3_bits(alpha: f64) -> u8 {
    ((alpha.rem_euclid(1.0) * 8.0).round() as u64 % 8) as u8
}

fn mod1(x: f64) -> f64 {
    let r = x.rem_euclid(1.0);
    r.min(1.0 - r)
}

/// Recover `phi` bits from the 3-bit estimates `beta_j` (numerators over 8)
/// for `j = 0 .. d-3`, in the order produced by the measurement loop.
///
/// The last entry fixes the lowest three bits; each earlier entry decides
/// one more bit by the quarter-distance rule.
pub fn kitaev_postprocess(betas: &[u8], d: usize) -> PhaseFixedPoint {
    assert!(d >= 3 && betas.len() == d - 2);
    let mut bits = vec![0u8; d];
    let last = betas[d - 3];
    bits[0] = last & 1;
    bits[1] = (last >> 1) & 1;
    bits[2] = (last >> 2) & 1;
    for j in (0..d - 3).rev() {
        // Deciding bit phi_{d-j-1}; known bits phi_{d-j-2}, phi_{d-j-3}.
        let hi = bits[d - j - 2] as f64;
        let lo = bits[d - j - 3] as f64;
        let beta = betas[j] as f64 / 8.0;
        let with_zero = hi / 4.0 + lo / 8.0;
        let with_one = 0.5 + with_zero;
        bits[d - j - 1] = if mod1(with_zero - beta) < 0.25 {
            0
        } else {
            debug_assert!(mod1(with_one - beta) < 0.25);
            1
        };
    }
    PhaseFixedPoint { bits, d }
}

/// Kitaev's bit-by-bit phase estimation with exact simulated probabilities.
///
/// Requires `d >= 3` (the rounding window needs three bits); for `d < 3`
/// the single-circuit estimator is used directly. The eigenvector residual
/// is checked against `1e-8`.
pub fn kitaev_estimate(u: &CMatrix, eigvec: &QuantumState, d: usize) -> Result<PhaseFixedPoint> {
    u.check_unitary(UNITARY_TOL)?;
    let residual = eigen_residual(u, eigvec);
    if residual > 1e-8 {
        return Err(Error::NotEigenvector { residual });
    }
    let angle_from = |pc: f64, ps: f64| -> f64 {
        let c = 1.0 - 2.0 * pc;
        let s = 2.0 * ps - 1.0;
        (s.atan2(c) / (2.0 * std::f64::consts::PI)).rem_euclid(1.0)
    };
    if d < 3 {
        let (pc, ps) = kitaev_probabilities(u, eigvec)?;
        return Ok(PhaseFixedPoint::from_value(angle_from(pc, ps), d));
    }
    let mut betas = Vec::with_capacity(d - 2);
    let mut power = u.clone();
    for j in 0..=(d - 3) {
        let (pc, ps) = kitaev_probabilities(&power, eigvec)?;
        betas.push(round_to_3_bits(angle_from(pc, ps)));
        if j < d - 3 {
            power = power.matmul(&power);
        }
    }
    Ok(kitaev_postprocess(&betas, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase_estimation::qpe::phase_unitary;

    fn run(phi: f64, d: usize) -> PhaseFixedPoint {
        let u = phase_unitary(phi);
        kitaev_estimate(&u, &QuantumState::basis(1, 1), d).unwrap()
    }

    #[test]
    fn all_ones_phase_recovered_exactly() {
        // phi = 0.11111_2 = 31/32, d = 5.
        let est = run(31.0 / 32.0, 5);
        assert_eq!(est.bits, vec![1, 1, 1, 1, 1]);
        assert!((est.value() - 31.0 / 32.0).abs() < 1e-12);
    }

    #[test]
    fn single_leading_bit_recovered() {
        let est = run(0.5, 5);
        assert_eq!(est.bits, vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn assorted_exact_phases() {
        for num in 0..32u32 {
            let phi = num as f64 / 32.0;
            let est = run(phi, 5);
            assert!(
                (est.value() - phi).abs() < 1e-12,
                "phi={phi}: got {}",
                est.value()
            );
        }
    }

    #[test]
    fn both_tie_rounding_branches_recover_all_ones() {
        // 2^j phi = 0.11111...: alpha sits exactly between 0.111 and 1.000;
        // both roundings must reproduce the same bits.
        let d = 5;
        for tie_up in [false, true] {
            let betas: Vec<u8> = (0..=d - 3)
                .map(|j| {
                    let alpha = (31.0 / 32.0) * (1u64 << j) as f64;
                    let frac = alpha.rem_euclid(1.0);
                    let down = (frac * 8.0).floor();
                    let up = (frac * 8.0).ceil();
                    let choice = if (frac * 8.0 - down).abs() < (up - frac * 8.0).abs() {
                        down
                    } else if (frac * 8.0 - down).abs() > (up - frac * 8.0).abs() {
                        up
                    } else if tie_up {
                        up
                    } else {
                        down
                    };
                    (choice as u64 % 8) as u8
                })
                .collect();
            let est = kitaev_postprocess(&betas, d);
            assert_eq!(est.bits, vec![1, 1, 1, 1, 1], "tie_up={tie_up}");
        }
    }

    #[test]
    fn inexact_phase_lands_within_mod1_bound() {
        // phi = 0.111111_2 estimated with d = 4: both 0.0000 and 0.1111 obey
        // the 2^{-d} mod-1 bound.
        let phi = 63.0 / 64.0;
        let est = run(phi, 4);
        let dist = mod1(est.value() - phi);
        assert!(dist < 1.0 / 16.0, "estimate {} distance {dist}", est.value());
    }

    #[test]
    fn non_eigenvector_rejected() {
        let u = phase_unitary(0.3);
        let mut c = Circuit::new(1);
        c.h(0);
        let plus = c.apply(&QuantumState::zero(1)).unwrap();
        assert!(matches!(
            kitaev_estimate(&u, &plus, 4),
            Err(Error::NotEigenvector { .. })
        ));
    }

    #[test]
    fn short_registers_use_the_plain_estimator() {
        let est = run(0.25, 2);
        assert!((est.value() - 0.25).abs() < 1e-12);
    }
}
