use super::CMatrix;
use crate::error::{Error, Result};

/// Union of closed real intervals `[center - radius, center + radius]`,
/// sorted by left endpoint.
#[derive(Debug, Clone)]
pub struct IntervalUnion {
    intervals: Vec<(f64, f64)>,
}

impl IntervalUnion {
    pub fn from_discs(discs: impl IntoIterator<Item = (f64, f64)>) -> Self {
        let mut intervals: Vec<(f64, f64)> =
            discs.into_iter().map(|(c, r)| (c - r, c + r)).collect();
        intervals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        IntervalUnion { intervals }
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.intervals.iter().any(|&(lo, hi)| x >= lo - tol && x <= hi + tol)
    }

    pub fn min_left(&self) -> f64 {
        self.intervals.iter().map(|i| i.0).fold(f64::INFINITY, f64::min)
    }

    pub fn max_right(&self) -> f64 {
        self.intervals.iter().map(|i| i.1).fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Gershgorin discs of a square matrix, restricted to the real line
/// (centers are the real parts of the diagonal; for Hermitian input the
/// diagonal is real and every eigenvalue lies in the returned union).
pub fn gershgorin_bounds(a: &CMatrix) -> Result<IntervalUnion> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let discs = (0..n).map(|i| {
        let radius: f64 = (0..n).filter(|&j| j != i).map(|j| a[(i, j)].norm()).sum();
        (a[(i, i)].re, radius)
    });
    Ok(IntervalUnion::from_discs(discs))
}

/// `|| U_K ... U_1 - V_K ... V_1 ||` for two equal-length lists of unitaries
/// (the product applies list element 0 first). The hybrid argument bounds
/// this by the sum of the individual deviations.
pub fn compose_error(exact: &[CMatrix], approx: &[CMatrix]) -> Result<f64> {
    if exact.len() != approx.len() {
        return Err(Error::DimensionMismatch { left: exact.len(), right: approx.len() });
    }
    if exact.is_empty() {
        return Ok(0.0);
    }
    let dim = exact[0].rows();
    for m in exact.iter().chain(approx) {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::DimensionMismatch { left: m.rows(), right: dim });
        }
        m.check_unitary(1e-8)?;
    }
    let prod = |list: &[CMatrix]| {
        let mut p = list[0].clone();
        for u in &list[1..] {
            p = u.matmul(&p);
        }
        p
    };
    Ok(prod(exact).sub(&prod(approx)).op_norm())
}
