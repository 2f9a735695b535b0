//! Scalar quantum signal processing: the Chebyshev polynomial toolkit,
//! approximation targets, SU(2) products in the three phase conventions and
//! the optimization-based symmetric phase-factor solver.

mod bessel;
mod chebyshev;
mod jacobi_anger;
mod phases;
mod solver;
mod targets;

pub use bessel::{bessel_j_series, bessel_j_upto};
pub use chebyshev::{interpolate, ChebyshevPoly, Parity, MAXNORM_GRID};
pub use jacobi_anger::{jacobi_anger, JacobiAnger};
pub use phases::{qsp_response, qsp_unitary, Convention, PhaseFactors, TargetSpec};
pub use solver::{solve_phases, SolveOptions};
pub use targets::{approx_target, erf, ApproxTarget, TargetKind};
