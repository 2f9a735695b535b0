//! Desk-scale classical simulation of quantum-algorithm primitives.
//!
//! The crate builds, composes and numerically verifies the standard toolbox
//! of quantum algorithms for matrix computation: a dense state-vector
//! simulator, Grover search and amplitude amplification, quantum Fourier
//! transform and phase estimation, HHL and discretized PDE linear systems,
//! Trotter product formulas with commutator error bounds, block encodings,
//! qubitization, Szegedy walks, quantum signal processing with an
//! optimization-based phase-factor solver, and eigenvalue / singular value
//! transformation with their applications (Hamiltonian simulation, ground
//! state filtering, linear-system inversion, fixed-point amplitude
//! amplification).
//!
//! Every construction is checked against an independent dense-matrix oracle
//! built on the deterministic kernels in [`linalg`]. All operations are pure
//! and seedable; nothing draws from global randomness.

pub mod error;
pub mod hamiltonians;
pub mod linalg;
pub mod phase_estimation;
pub mod primitives;
pub mod qsp;
pub mod simulator;

pub use error::{Error, Result};
