//! Quantum Fourier transform, phase estimation with leakage analysis,
//! Kitaev's bit-by-bit estimator, ground-state energy estimation by
//! repeated QPE minima, and amplitude estimation on the Grover iterate.

mod amplitude_estimation;
mod ground_energy;
mod kitaev;
mod qft;
mod qpe;

pub use amplitude_estimation::amplitude_estimate;
pub use ground_energy::{ground_energy_qpe, qpe_distribution_from_spectrum, EnergyEstimate};
pub use kitaev::{kitaev_estimate, kitaev_postprocess, PhaseFixedPoint};
pub use qft::{dft_matrix, qft, MAX_QFT_QUBITS};
pub use qpe::{
    mod1_distance, phase_unitary, qpe, qpe_final_state, qpe_gamma, qpe_tail_probability, QpeResult,
};
