use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

/// Phase-factor conventions for the signal-processing product.
///
/// * `W`: rotations `W(x) = e^{i arccos(x) X}`; the target polynomial is
///   read off as `Re P(x)` with `P` the top-left entry.
/// * `O`: rotations `O(x) = W(x)` conjugated onto the real rotation matrix;
///   related to `W` by a `pi/4` shift on both end phases.
/// * `Tilde`: the reflection form consumed by eigenvalue/singular-value
///   transformation circuits; related to `W` by `pi/4` shifts at the ends
///   and `pi/2` shifts in the middle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    W,
    O,
    Tilde,
}

/// Description of the approximation target a phase sequence was solved for.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TargetSpec {
    pub kind: String,
    pub params: BTreeMap<String, f64>,
}

/// A sequence of `d + 1` signal-processing phases.
///
/// Internally the phases are stored in the `W` convention; the tagged
/// convention is a view, so convention round trips are exact by
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseFactors {
    w_phases: Vec<f64>,
    convention: Convention,
    /// Verbatim constructor input, kept so views in the construction
    /// convention (and file round trips) are bit exact.
    exact_view: Option<(Convention, Vec<f64>)>,
    pub symmetric: bool,
    pub target: Option<TargetSpec>,
    pub residual: Option<f64>,
}

impl PhaseFactors {
    pub fn from_w(phases: Vec<f64>) -> Self {
        assert!(!phases.is_empty());
        let symmetric = is_symmetric(&phases);
        PhaseFactors {
            w_phases: phases,
            convention: Convention::W,
            exact_view: None,
            symmetric,
            target: None,
            residual: None,
        }
    }

    /// Interpret `phases` in the given convention.
    pub fn from_convention(phases: Vec<f64>, convention: Convention) -> Self {
        let w = match convention {
            Convention::W => phases.clone(),
            Convention::O => shifted(&phases, FRAC_PI_4, 0.0, -FRAC_PI_4),
            Convention::Tilde => shifted(&phases, -FRAC_PI_4, -FRAC_PI_2, -FRAC_PI_4),
        };
        let mut pf = PhaseFactors::from_w(w);
        pf.convention = convention;
        if convention != Convention::W {
            pf.exact_view = Some((convention, phases));
        }
        pf
    }

    /// The all-zero-polynomial initial guess `(pi/4, 0, ..., 0, pi/4)` in
    /// the `W` convention; `g(x, phi0) = 0` identically.
    pub fn initial_guess(degree: usize) -> Self {
        let mut phases = vec![0.0; degree + 1];
        phases[0] = FRAC_PI_4;
        if degree > 0 {
            phases[degree] = FRAC_PI_4;
        } else {
            phases[0] = FRAC_PI_2; // d = 0: P = e^{i pi/2} has zero real part
        }
        PhaseFactors::from_w(phases)
    }

    pub fn degree(&self) -> usize {
        self.w_phases.len() - 1
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Phases in the tagged convention.
    pub fn phases(&self) -> Vec<f64> {
        if let Some((conv, view)) = &self.exact_view {
            if *conv == self.convention {
                return view.clone();
            }
        }
        match self.convention {
            Convention::W => self.w_phases.clone(),
            Convention::O => shifted(&self.w_phases, -FRAC_PI_4, 0.0, FRAC_PI_4),
            Convention::Tilde => shifted(&self.w_phases, FRAC_PI_4, FRAC_PI_2, FRAC_PI_4),
        }
    }

    /// Phases in an explicit convention, regardless of the tag.
    pub fn phases_in(&self, convention: Convention) -> Vec<f64> {
        self.convert(convention).phases()
    }

    /// Retag to another convention. The underlying phase data is shared, so
    /// round trips are exact.
    pub fn convert(&self, to: Convention) -> PhaseFactors {
        let mut out = self.clone();
        out.convention = to;
        out
    }

    pub fn w_phases(&self) -> &[f64] {
        &self.w_phases
    }

    /// Serialize to the interchange JSON format.
    pub fn to_json(&self) -> Result<String> {
        let doc = PhaseFile {
            degree: self.degree(),
            convention: self.convention,
            parity: if self.degree() % 2 == 0 { "even".into() } else { "odd".into() },
            phases: self.phases(),
            target: self.target.clone(),
            residual: self.residual,
        };
        Ok(serde_json::to_string_pretty(&serde_json::to_value(&doc)?)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PhaseFile = serde_json::from_str(text)?;
        if doc.phases.len() != doc.degree + 1 {
            return Err(Error::PhaseLengthMismatch { got: doc.phases.len(), degree: doc.degree });
        }
        let mut pf = PhaseFactors::from_convention(doc.phases, doc.convention);
        pf.target = doc.target;
        pf.residual = doc.residual;
        Ok(pf)
    }
}

#[derive(Serialize, Deserialize)]
struct PhaseFile {
    degree: usize,
    convention: Convention,
    parity: String,
    phases: Vec<f64>,
    target: Option<TargetSpec>,
    residual: Option<f64>,
}

fn is_symmetric(phases: &[f64]) -> bool {
    let d = phases.len() - 1;
    (0..=d).all(|j| (phases[j] - phases[d - j]).abs() <= 1e-12)
}

fn shifted(phases: &[f64], ends: f64, middle: f64, last: f64) -> Vec<f64> {
    let d = phases.len() - 1;
    phases
        .iter()
        .enumerate()
        .map(|(j, &p)| {
            if j == 0 {
                p + ends
            } else if j == d {
                p + last
            } else {
                p + middle
            }
        })
        .collect()
}

fn phase_z(phi: f64) -> CMatrix {
    CMatrix::diag(&[Complex64::new(0.0, phi).exp(), Complex64::new(0.0, -phi).exp()])
}

fn w_rot(x: f64) -> CMatrix {
    let s = (1.0 - x * x).max(0.0).sqrt();
    CMatrix::from_entries(
        2,
        2,
        vec![Complex64::new(x, 0.0), Complex64::new(0.0, s), Complex64::new(0.0, s), Complex64::new(x, 0.0)],
    )
    .unwrap()
}

fn o_rot(x: f64) -> CMatrix {
    let s = (1.0 - x * x).max(0.0).sqrt();
    CMatrix::from_real(2, 2, &[x, -s, s, x]).unwrap()
}

fn reflection(x: f64) -> CMatrix {
    let s = (1.0 - x * x).max(0.0).sqrt();
    CMatrix::from_real(2, 2, &[x, s, s, -x]).unwrap()
}

/// Evaluate the signal-processing product at scalar `x` in the phase
/// sequence's tagged convention.
///
/// The `Tilde` evaluation includes the `(-i)^d` prefactor that the
/// eigenvalue-transformation circuits carry, so its diagonal equals that of
/// the `W`/`O` products exactly.
pub fn qsp_unitary(x: f64, phases: &PhaseFactors) -> Result<CMatrix> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::XOutOfRange { x });
    }
    let d = phases.degree();
    let seq = phases.phases();
    let rot: fn(f64) -> CMatrix = match phases.convention() {
        Convention::W => w_rot,
        Convention::O => o_rot,
        Convention::Tilde => reflection,
    };
    let mut u = phase_z(seq[0]);
    for &p in &seq[1..] {
        u = u.matmul(&rot(x)).matmul(&phase_z(p));
    }
    if phases.convention() == Convention::Tilde {
        let pref = Complex64::new(0.0, -1.0).powu(d as u32);
        u = u.scale(pref);
    }
    Ok(u)
}

/// `g(x, Phi) = Re P(x)` where `P` is the top-left entry of the
/// `W`-convention product.
pub fn qsp_response(x: f64, phases: &PhaseFactors) -> f64 {
    let w = phases.convert(Convention::W);
    qsp_unitary(x, &w).expect("x in range").entries()[0].re
}
