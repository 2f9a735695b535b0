use crate::error::Result;
use crate::simulator::{measure, Circuit, Gate, QuantumState};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Constant,
    Balanced,
}

/// Deutsch's algorithm on a one-bit boolean function given as its truth
/// table `(f(0), f(1))`. One oracle application, deterministic outcome:
/// measuring qubit 0 yields 0 exactly when `f(0) = f(1)`.
pub fn deutsch(f_table: (bool, bool)) -> Result<Classification> {
    let mut c = Circuit::new(2);
    // |0>|1| -> |+>|->
    c.x(1).h(0).h(1);
    // Oracle U_f |x,y> = |x, y xor f(x)>, one application:
    //   f = (0,0): identity; (1,1): I (x) X; (0,1): CNOT; (1,0): 0-controlled X.
    match f_table {
        (false, false) => {}
        (true, true) => {
            c.x(1);
        }
        (false, true) => {
            c.cnot(0, 1);
        }
        (true, false) => {
            c.controlled(Gate::X, vec![1], vec![(0, false)])?;
        }
    }
    c.h(0);
    let out = c.apply(&QuantumState::zero(2))?;
    // The marginal is deterministic; the seed is immaterial.
    let (bits, _, p) = measure(&out, &[0], 0)?;
    debug_assert!((p - 1.0).abs() < 1e-12);
    Ok(if bits[0] == 0 { Classification::Constant } else { Classification::Balanced })
}
