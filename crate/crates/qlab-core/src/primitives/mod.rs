//! Search and estimation primitives: Deutsch's algorithm, Grover search,
//! amplitude amplification and damping, the query lower-bound experiment,
//! and the Hadamard/swap overlap tests.

mod amplify;
mod deutsch;
mod grover;
mod lower_bound;
mod overlap;

pub use amplify::{amplitude_amplify, AmplifyMode, FlagRegister};
pub use deutsch::{deutsch, Classification};
pub use grover::{
    grover_operator_dense, grover_search, marked_reflection_circuit, recommended_iterations,
    uniform_reflection_circuit, GroverRun, SearchProblem,
};
pub use lower_bound::{lower_bound_experiment, lower_bound_trajectory};
pub use overlap::{hadamard_test, swap_test};
