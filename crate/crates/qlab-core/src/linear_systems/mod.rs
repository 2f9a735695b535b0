//! Quantum linear-system machinery: the HHL solver with an exact-spectrum
//! eigenvalue register, discretized Poisson / heat / ODE instance builders
//! with analytic spectra, and condition-number certificates.

mod hhl;
mod instance;
mod ode;
mod poisson;

pub use hhl::{controlled_rotation, hhl_solve, HhlOutput};
pub use instance::{InstanceSource, QlspInstance, QlspMetadata};
pub use ode::{build_heat_qlsp, build_ode_qlsp, ode_condition_bounds, OdeSystem};
pub use poisson::{build_poisson, tridiag_eigs, AnalyticEigs};
