use super::pauli::{PauliHamiltonian, PauliString};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, matrix_exp_i, CMatrix};
use crate::simulator::Circuit;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrotterOrder {
    First,
    /// Strang / symmetric splitting.
    Second,
}

/// Exponential of one split part over a time step.
///
/// When all terms of the part commute pairwise (checked symbolically), the
/// exponential is assembled as a circuit of independent 1-/2-qubit gate
/// exponentials, exactly as a hardware implementation would; otherwise it
/// falls back to the dense eigendecomposition. Each Pauli word exponential
/// uses `e^{-i theta P} = cos(theta) I - i sin(theta) P` on its support.
fn exp_part(n: usize, terms: &[&PauliString], dt: f64) -> Result<CMatrix> {
    let commuting = terms
        .iter()
        .enumerate()
        .all(|(i, a)| terms[i + 1..].iter().all(|b| a.commutes_with(b)));
    let small_support = terms.iter().all(|t| {
        let s = t.support().len();
        (1..=2).contains(&s)
    });
    if commuting && small_support && n <= 12 {
        let mut c = Circuit::new(n);
        for t in terms {
            let support = t.support();
            let theta = dt * t.coefficient.re;
            // Restriction of the word to its support (unit coefficient).
            let mut local = CMatrix::identity(1);
            for &q in &support {
                local = local.kron(&t.letters[q].matrix());
            }
            let dim = local.rows();
            let gate = CMatrix::identity(dim)
                .scale(Complex64::new(theta.cos(), 0.0))
                .add(&local.scale(Complex64::new(0.0, -theta.sin())));
            c.custom(gate, support)?;
        }
        c.unitary()
    } else {
        let dense = crate::hamiltonians::pauli_sum_dense(n, &terms.iter().map(|t| (*t).clone()).collect::<Vec<_>>());
        matrix_exp_i(&dense, dt)
    }
}

/// Trotter product formula for a split Hamiltonian over time `t` with `L`
/// steps. First order returns `(e^{-i dt H1} e^{-i dt H2})^L`; second order
/// the symmetric product with half steps of `H2` on the outside.
pub fn trotter_evolve(
    h: &PauliHamiltonian,
    t: f64,
    steps: usize,
    order: TrotterOrder,
) -> Result<CMatrix> {
    if h.n > 10 {
        return Err(Error::DimensionCap { dim: 1 << h.n, cap: 1 << 10 });
    }
    let (part1, part2) = h.split_parts()?;
    let dt = t / steps as f64;
    let step = match order {
        TrotterOrder::First => {
            let e1 = exp_part(h.n, &part1, dt)?;
            let e2 = exp_part(h.n, &part2, dt)?;
            e1.matmul(&e2)
        }
        TrotterOrder::Second => {
            let e1 = exp_part(h.n, &part1, dt)?;
            let e2h = exp_part(h.n, &part2, dt / 2.0)?;
            e2h.matmul(&e1).matmul(&e2h)
        }
    };
    Ok(step.pow(steps))
}

/// Operator norm of a Hermitian matrix through its spectrum.
fn herm_norm(a: &CMatrix) -> Result<f64> {
    let eig = hermitian_eig(a)?;
    Ok(eig.eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.abs())))
}

#[derive(Debug, Clone, Copy)]
pub struct TrotterErrorBounds {
    /// `|| e^{-i dt (H1+H2)} - e^{-i dt H1} e^{-i dt H2} ||`.
    pub actual: f64,
    /// `dt^2/2 ||[H1, H2]||`.
    pub commutator_bound: f64,
    /// `dt^2 nu^2`, `nu = max(||H1||, ||H2||)`.
    pub operator_bound: f64,
}

/// One-step first-order Trotter defect against the commutator and operator
/// norm estimates. The chain `actual <= commutator <= operator` holds for
/// every valid input.
pub fn trotter_error_bounds(h1: &CMatrix, h2: &CMatrix, dt: f64) -> Result<TrotterErrorBounds> {
    if h1.rows() != h2.rows() {
        return Err(Error::DimensionMismatch { left: h1.rows(), right: h2.rows() });
    }
    h1.check_hermitian(1e-10)?;
    h2.check_hermitian(1e-10)?;
    let sum = h1.add(h2);
    let exact = matrix_exp_i(&sum, dt)?;
    let split = matrix_exp_i(h1, dt)?.matmul(&matrix_exp_i(h2, dt)?);
    let actual = exact.sub(&split).op_norm();
    let comm = h1.matmul(h2).sub(&h2.matmul(h1));
    // i [H1, H2] is Hermitian; its spectrum gives the norm.
    let comm_norm = herm_norm(&comm.scale(Complex64::new(0.0, 1.0)))?;
    let nu = herm_norm(h1)?.max(herm_norm(h2)?);
    Ok(TrotterErrorBounds {
        actual,
        commutator_bound: dt * dt / 2.0 * comm_norm,
        operator_bound: dt * dt * nu * nu,
    })
}

/// Quadrature value of the Duhamel defect integral
/// `int_0^t ||[e^{-i s H1}, H2]|| ds`, which upper bounds the one-step
/// Trotter error. Simpson's rule on `2m` panels.
pub fn trotter_duhamel_bound(h1: &CMatrix, h2: &CMatrix, t: f64, panels: usize) -> Result<f64> {
    let m = 2 * panels.max(1);
    let hstep = t / m as f64;
    let integrand = |s: f64| -> Result<f64> {
        let e1 = matrix_exp_i(h1, s)?;
        let comm = e1.matmul(h2).sub(&h2.matmul(&e1));
        Ok(comm.op_norm())
    };
    let mut acc = integrand(0.0)? + integrand(t)?;
    for i in 1..m {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * integrand(i as f64 * hstep)?;
    }
    Ok(acc * hstep / 3.0)
}
