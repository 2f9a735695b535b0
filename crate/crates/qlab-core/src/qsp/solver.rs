use super::chebyshev::{ChebyshevPoly, Parity};
use super::phases::PhaseFactors;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Options for the symmetric phase-factor optimization.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub max_iter: usize,
    /// Stop once the mean-square objective falls below this value.
    pub obj_tol: f64,
    /// Stop once the gradient sup-norm falls below this value.
    pub grad_tol: f64,
    /// Largest acceptable final objective; anything above reports
    /// non-convergence.
    pub accept_tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { max_iter: 500, obj_tol: 1e-24, grad_tol: 5e-14, accept_tol: 1e-12 }
    }
}

/// 2x2 complex matrix as a flat array, row-major.
type M2 = [Complex64; 4];

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mul2(a: &M2, b: &M2) -> M2 {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

fn phase2(phi: f64) -> M2 {
    [c(0.0, phi).exp(), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -phi).exp()]
}

fn wrot2(x: f64) -> M2 {
    let s = (1.0 - x * x).max(0.0).sqrt();
    [c(x, 0.0), c(0.0, s), c(0.0, s), c(x, 0.0)]
}

/// Response `g(x, Phi)` and its partials with respect to every full phase,
/// computed with forward/backward partial products in O(d) per point.
fn response_and_grad(x: f64, phases: &[f64], grad: &mut [f64]) -> f64 {
    let d = phases.len() - 1;
    let w = wrot2(x);
    // prefix[j] = e^{i phi_0 Z} prod_{m<=j} (W e^{i phi_m Z})
    let mut prefix = Vec::with_capacity(d + 1);
    prefix.push(phase2(phases[0]));
    for &p in &phases[1..] {
        let last = prefix.last().unwrap();
        prefix.push(mul2(&mul2(last, &w), &phase2(p)));
    }
    // suffix[j] = prod_{m>j} (W e^{i phi_m Z}); built backwards.
    let mut suffix = vec![[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]; d + 1];
    for j in (0..d).rev() {
        let step = mul2(&w, &phase2(phases[j + 1]));
        suffix[j] = mul2(&step, &suffix[j + 1]);
    }
    let u = &prefix[d];
    let g = u[0].re;
    for j in 0..=d {
        let l = &prefix[j];
        let r = &suffix[j];
        // d/dphi_j Re U_00 = Re[i (L_00 R_00 - L_01 R_10)]
        let v = l[0] * r[0] - l[1] * r[2];
        grad[j] = -v.im;
    }
    g
}

/// Objective `F`, gradient over the reduced symmetric variables.
struct Objective {
    nodes: Vec<f64>,
    targets: Vec<f64>,
    d: usize,
    dt: usize,
    scratch: std::cell::RefCell<Vec<f64>>,
}

impl Objective {
    fn new(target: &ChebyshevPoly, d: usize) -> Self {
        let dt = (d + 2) / 2; // ceil((d+1)/2)
        let nodes: Vec<f64> = (1..=dt)
            .map(|k| ((2 * k - 1) as f64 * std::f64::consts::PI / (4 * dt) as f64).cos())
            .collect();
        let targets = nodes.iter().map(|&x| target.eval(x)).collect();
        Objective { nodes, targets, d, dt, scratch: std::cell::RefCell::new(vec![0.0; d + 1]) }
    }

    fn expand(&self, v: &[f64]) -> Vec<f64> {
        let mut full = vec![0.0; self.d + 1];
        for j in 0..=self.d {
            full[j] = v[j.min(self.d - j)];
        }
        full
    }

    fn eval(&self, v: &[f64], grad_out: Option<&mut [f64]>) -> f64 {
        let full = self.expand(v);
        let mut f = 0.0f64;
        let mut grad_full_acc = vec![0.0f64; self.d + 1];
        let mut scratch = self.scratch.borrow_mut();
        let want_grad = grad_out.is_some();
        for (k, &x) in self.nodes.iter().enumerate() {
            let g = if want_grad {
                response_and_grad(x, &full, &mut scratch)
            } else {
                // Forward product only.
                let w = wrot2(x);
                let mut u = phase2(full[0]);
                for &p in &full[1..] {
                    u = mul2(&mul2(&u, &w), &phase2(p));
                }
                u[0].re
            };
            let r = g - self.targets[k];
            f += r * r;
            if want_grad {
                for j in 0..=self.d {
                    grad_full_acc[j] += 2.0 * r * scratch[j];
                }
            }
        }
        let scale = 1.0 / self.dt as f64;
        if let Some(gout) = grad_out {
            for g in gout.iter_mut() {
                *g = 0.0;
            }
            for j in 0..=self.d {
                gout[j.min(self.d - j)] += scale * grad_full_acc[j];
            }
            // Mirrored positions both map to the same reduced variable, but
            // for even d the central phase appears only once; the fold above
            // already counts each full position exactly once.
        }
        f * scale
    }
}

/// Solve for symmetric phase factors representing `target` in the `W`
/// convention, starting from the flat initial guess.
///
/// The target must have definite parity and max-norm strictly below one.
/// The optimizer is a deterministic L-BFGS with backtracking line search;
/// it reports [`Error::NonConvergence`] when the final mean-square residual
/// exceeds `options.accept_tol`.
pub fn solve_phases(target: &ChebyshevPoly, options: &SolveOptions) -> Result<PhaseFactors> {
    if target.parity == Parity::None {
        return Err(Error::ParityMismatch);
    }
    let maxnorm = target.maxnorm();
    if maxnorm >= 1.0 {
        return Err(Error::MaxNormViolated { norm: maxnorm });
    }
    // Formal degree of the correct parity.
    let mut d = target.len_degree();
    match target.parity {
        Parity::Even if d % 2 == 1 => d -= 1,
        Parity::Odd if d % 2 == 0 => {
            if d == 0 {
                return Err(Error::ParityMismatch);
            }
            d -= 1;
        }
        _ => {}
    }

    let obj = Objective::new(target, d);
    let dt = obj.dt;

    // Reduced initial guess: (pi/4, 0, ..., 0).
    let mut v = vec![0.0f64; dt];
    v[0] = std::f64::consts::FRAC_PI_4;

    let mut grad = vec![0.0f64; dt];
    let mut f = obj.eval(&v, Some(&mut grad));

    // L-BFGS memory.
    let mem = 12usize;
    let mut s_list: Vec<Vec<f64>> = Vec::new();
    let mut y_list: Vec<Vec<f64>> = Vec::new();
    let mut rho_list: Vec<f64> = Vec::new();

    let mut iterations = 0usize;
    for iter in 0..options.max_iter {
        iterations = iter + 1;
        let gnorm = grad.iter().fold(0.0f64, |m, g| m.max(g.abs()));
        if f <= options.obj_tol || gnorm <= options.grad_tol {
            break;
        }

        // Two-loop recursion for the search direction.
        let mut q = grad.clone();
        let mut alphas = vec![0.0f64; s_list.len()];
        for i in (0..s_list.len()).rev() {
            let a = rho_list[i] * dot(&s_list[i], &q);
            alphas[i] = a;
            axpy(&mut q, -a, &y_list[i]);
        }
        let gamma = if let (Some(s), Some(y)) = (s_list.last(), y_list.last()) {
            dot(s, y) / dot(y, y).max(1e-300)
        } else {
            1.0
        };
        for x in q.iter_mut() {
            *x *= gamma;
        }
        for i in 0..s_list.len() {
            let b = rho_list[i] * dot(&y_list[i], &q);
            axpy(&mut q, alphas[i] - b, &s_list[i]);
        }
        let mut dir: Vec<f64> = q.iter().map(|x| -x).collect();
        let mut slope = dot(&grad, &dir);
        if slope >= 0.0 {
            dir = grad.iter().map(|g| -g).collect();
            slope = dot(&grad, &dir);
        }

        // Backtracking Armijo line search.
        let mut step = 1.0f64;
        let mut accepted = false;
        let mut v_new = v.clone();
        let mut f_new = f;
        for _ in 0..50 {
            for (vn, (vi, di)) in v_new.iter_mut().zip(v.iter().zip(&dir)) {
                *vn = vi + step * di;
            }
            f_new = obj.eval(&v_new, None);
            if f_new <= f + 1e-4 * step * slope {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }

        let mut grad_new = vec![0.0f64; dt];
        let f_check = obj.eval(&v_new, Some(&mut grad_new));
        debug_assert!((f_check - f_new).abs() <= 1e-12 * f_new.abs().max(1e-300) + 1e-300);

        let s: Vec<f64> = v_new.iter().zip(&v).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = grad_new.iter().zip(&grad).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &y);
        if sy > 1e-300 {
            s_list.push(s);
            y_list.push(y);
            rho_list.push(1.0 / sy);
            if s_list.len() > mem {
                s_list.remove(0);
                y_list.remove(0);
                rho_list.remove(0);
            }
        }
        v = v_new;
        f = f_new;
        grad = grad_new;
    }

    if !(f <= options.accept_tol) {
        return Err(Error::NonConvergence { residual: f, iterations });
    }

    let full = obj.expand(&v);
    let mut pf = PhaseFactors::from_w(full);
    pf.symmetric = true;
    pf.residual = Some(f);
    Ok(pf)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(y: &mut [f64], a: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}
