//! Pauli-string Hamiltonians, exact propagators, and Trotter product
//! formulas with commutator-scaling error certification.

mod pauli;
mod trotter;

pub use pauli::{jordan_wigner, pauli_sum_dense, tfim, FermionOp, PauliHamiltonian, PauliLetter, PauliString};
pub use trotter::{trotter_error_bounds, trotter_evolve, trotter_duhamel_bound, TrotterErrorBounds, TrotterOrder};
