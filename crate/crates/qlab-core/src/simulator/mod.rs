//! Gate-level state-vector simulator.
//!
//! Qubit 0 is the most significant bit of the basis index: an n-qubit basis
//! state `|q0 q1 ... q_{n-1}>` lives at index `q0 2^{n-1} + ... + q_{n-1}`,
//! so `|01> = (0,1,0,0)^T`. Gate application is in-place stride iteration
//! over the amplitude vector; only [`Circuit::unitary`] materializes a dense
//! matrix.

mod circuit;
mod gate;
mod measure;
mod state;

pub use circuit::Circuit;
pub use gate::{Gate, GateOp};
pub use measure::{marginal_distribution, measure, partial_trace, postselect, sample_outcomes, DensityMatrix};
pub use state::QuantumState;

/// Largest supported qubit count for dense simulation.
pub const MAX_QUBITS: usize = 14;
