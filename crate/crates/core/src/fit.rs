//! Single-resonance Fano profile fitting.
//!
//! The profile is `amplitude * (q + eps)^2 / (eps^2 + 1) + offset` with
//! `eps = 2 (E - e0) / gamma`. Parameters are found by damped Gauss-Newton
//! (Levenberg-Marquardt) with analytic derivatives. The width is optimized as
//! `u = ln(gamma)` so it can never leave `(0, inf)`.
//!
//! The profile has a discrete ambiguity: `(q, a, b)` and `(-1/q, -a q^2, b + a (1 + q^2))`
//! describe the same curve. Fitted models are reported in the branch with
//! `amplitude >= 0`.

use nalgebra::{DMatrix, DVector, Matrix5, Vector5};
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::scan::CrossSectionTrace;

pub const N_PARAMS: usize = 5;

/// Parameter names in the order used by gradients and uncertainties.
pub const PARAM_NAMES: [&str; N_PARAMS] = ["q", "e0", "gamma", "amplitude", "offset"];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FanoProfileModel {
    pub q: f64,
    pub e0: f64,
    pub gamma: f64,
    pub amplitude: f64,
    pub offset: f64,
}

impl FanoProfileModel {
    pub fn new(q: f64, e0: f64, gamma: f64, amplitude: f64, offset: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(FanoError::Validation {
                field: "gamma",
                reason: format!("must be finite and positive, got {gamma}"),
            });
        }
        Ok(Self {
            q,
            e0,
            gamma,
            amplitude,
            offset,
        })
    }

    pub fn epsilon(&self, energy: f64) -> f64 {
        2.0 * (energy - self.e0) / self.gamma
    }

    pub fn predict(&self, energy: f64) -> f64 {
        let eps = self.epsilon(energy);
        let qe = self.q + eps;
        self.amplitude * qe * qe / (eps * eps + 1.0) + self.offset
    }

    /// Partial derivatives of [`predict`](Self::predict) with respect to
    /// `(q, e0, gamma, amplitude, offset)`.
    pub fn gradient(&self, energy: f64) -> [f64; N_PARAMS] {
        let eps = self.epsilon(energy);
        let qe = self.q + eps;
        let d = eps * eps + 1.0;
        let a = self.amplitude;
        let d_eps = 2.0 * a * qe * (1.0 - self.q * eps) / (d * d);
        [
            2.0 * a * qe / d,
            d_eps * (-2.0 / self.gamma),
            d_eps * (-eps / self.gamma),
            qe * qe / d,
            1.0,
        ]
    }

    pub fn to_array(&self) -> [f64; N_PARAMS] {
        [self.q, self.e0, self.gamma, self.amplitude, self.offset]
    }

    /// The equivalent parameter set with non-negative amplitude.
    ///
    /// A profile with `amplitude < 0` and `q = 0` has no finite counterpart and is
    /// returned unchanged.
    pub fn canonical(&self) -> Self {
        if self.amplitude >= 0.0 || self.q == 0.0 {
            return *self;
        }
        let q = -1.0 / self.q;
        let amplitude = -self.amplitude * self.q * self.q;
        let offset = self.offset + self.amplitude + self.amplitude * self.q * self.q;
        Self {
            q,
            amplitude,
            offset,
            ..*self
        }
    }
}

/// Result of [`initial_guess`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InitialGuess {
    pub model: FanoProfileModel,
    /// The trace is flat: it carries no resonance structure to fit.
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitOptions {
    pub max_iter: usize,
    pub tol_step: f64,
    pub tol_grad: f64,
    pub damping_init: f64,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self {
            max_iter: 200,
            tol_step: 1e-10,
            tol_grad: 1e-12,
            damping_init: 1e-3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FanoFitResult {
    pub model: FanoProfileModel,
    /// Root-mean-square residual at the reported parameters.
    pub residual_norm: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Linearized one-sigma estimates in [`PARAM_NAMES`] order; `NaN` when the
    /// normal matrix is singular.
    pub parameter_uncertainties: [f64; N_PARAMS],
    /// RMS residual of the starting point followed by every accepted iterate.
    pub rms_history: Vec<f64>,
}

/// Deterministic starting point read off the shape of the trace.
///
/// The baseline is the median of `sigma` (the far wings of a resonance). For a
/// profile with non-negative amplitude the minimum sits at `eps = -q` and the
/// maximum at `eps = 1/q`; when both lie inside the trace they fix `q`, `gamma`
/// and `e0`. Otherwise `e0` is the point of largest deviation from the baseline and
/// `gamma` the full width at half deviation.
pub fn initial_guess(trace: &CrossSectionTrace) -> Result<InitialGuess> {
    let (energies, sigma) = (trace.energies(), trace.sigma());
    let n = energies.len();
    if n < 5 {
        return Err(FanoError::InsufficientData { needed: 5, got: n });
    }
    let span = energies[n - 1] - energies[0];
    let base = median(sigma);
    let (i_lo, lo) = extremum(sigma, |a, b| a < b);
    let (i_hi, hi) = extremum(sigma, |a, b| a > b);

    if hi - lo <= 1e-14 * hi.abs().max(lo.abs()).max(1e-300) {
        return Ok(InitialGuess {
            model: FanoProfileModel {
                q: 0.0,
                e0: 0.5 * (energies[0] + energies[n - 1]),
                gamma: span / 10.0,
                amplitude: 0.0,
                offset: base,
            },
            degenerate: true,
        });
    }

    let (i_star, _) = sigma.iter().enumerate().fold((0, -1.0), |(bi, bd), (i, &s)| {
        let d = (s - base).abs();
        if d > bd {
            (i, d)
        } else {
            (bi, bd)
        }
    });
    let e_star = energies[i_star];
    let gamma_fw = half_deviation_width(energies, sigma, base, i_star).unwrap_or(span / 10.0);

    let depth = base - lo;
    let height = hi - base;
    let model = if depth > 0.05 * (hi - lo) {
        let q_mag = (height.max(0.0) / depth).sqrt();
        let interior = |i: usize| i > 0 && i + 1 < n;
        if (0.2..=5.0).contains(&q_mag) && interior(i_hi) && interior(i_lo) {
            // Both extrema resolved: E_hi - E_lo = (gamma / 2) (q + 1/q).
            let separation = energies[i_hi] - energies[i_lo];
            let q = q_mag.copysign(separation);
            let gamma = 2.0 * separation / (q + 1.0 / q);
            FanoProfileModel {
                q,
                e0: energies[i_lo] + 0.5 * gamma * q,
                gamma,
                amplitude: depth,
                offset: lo,
            }
        } else {
            let q = q_mag * asymmetry_sign(energies, sigma, base, e_star, gamma_fw);
            FanoProfileModel {
                q,
                e0: e_star,
                gamma: gamma_fw,
                amplitude: depth,
                offset: lo,
            }
        }
    } else {
        // A peak that never dips below the wings: Breit-Wigner-like, large |q|.
        let q = 10.0 * asymmetry_sign(energies, sigma, base, e_star, gamma_fw);
        let amplitude = height / (1.0 + q * q);
        FanoProfileModel {
            q,
            e0: e_star,
            gamma: gamma_fw,
            amplitude,
            offset: base - amplitude,
        }
    };
    Ok(InitialGuess {
        model,
        degenerate: false,
    })
}

fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// First index where `better` holds against every other value.
fn extremum(values: &[f64], better: impl Fn(f64, f64) -> bool) -> (usize, f64) {
    values.iter().copied().enumerate().fold(
        (0, values[0]),
        |(bi, bv), (i, v)| if better(v, bv) { (i, v) } else { (bi, bv) },
    )
}

fn half_deviation_width(energies: &[f64], sigma: &[f64], base: f64, i_star: usize) -> Option<f64> {
    let half = 0.5 * (sigma[i_star] - base).abs();
    let above = |i: usize| (sigma[i] - base).abs() >= half;
    let mut left = i_star;
    while left > 0 && above(left - 1) {
        left -= 1;
    }
    let mut right = i_star;
    while right + 1 < sigma.len() && above(right + 1) {
        right += 1;
    }
    // Count the half-spacing to the first point below half on each side.
    let lw = if left > 0 {
        0.5 * (energies[left] - energies[left - 1])
    } else {
        0.0
    };
    let rw = if right + 1 < sigma.len() {
        0.5 * (energies[right + 1] - energies[right])
    } else {
        0.0
    };
    let width = energies[right] - energies[left] + lw + rw;
    (width > 0.0).then_some(width)
}

/// `+1` when the profile (measured from the baseline) is larger to the right of
/// `e_star` than to the left, `-1` otherwise.
fn asymmetry_sign(energies: &[f64], sigma: &[f64], base: f64, e_star: f64, width: f64) -> f64 {
    let (mut left, mut right) = (0.0, 0.0);
    for (&e, &s) in energies.iter().zip(sigma) {
        let x = e - e_star;
        if x < 0.0 && x >= -width {
            left += s - base;
        } else if x > 0.0 && x <= width {
            right += s - base;
        }
    }
    if right >= left {
        1.0
    } else {
        -1.0
    }
}

/// Internal coordinates `(q, e0, ln gamma, amplitude, offset)`.
type Params = Vector5<f64>;

fn to_internal(m: &FanoProfileModel) -> Params {
    Vector5::new(m.q, m.e0, m.gamma.ln(), m.amplitude, m.offset)
}

fn from_internal(p: &Params) -> FanoProfileModel {
    FanoProfileModel {
        q: p[0],
        e0: p[1],
        gamma: p[2].exp(),
        amplitude: p[3],
        offset: p[4],
    }
}

fn sum_sq_residuals(model: &FanoProfileModel, energies: &[f64], sigma: &[f64]) -> f64 {
    energies
        .iter()
        .zip(sigma)
        .map(|(&e, &s)| {
            let r = model.predict(e) - s;
            r * r
        })
        .sum()
}

/// Residual vector and Jacobian in internal coordinates.
fn linearize(p: &Params, energies: &[f64], sigma: &[f64]) -> (DVector<f64>, DMatrix<f64>) {
    let model = from_internal(p);
    let n = energies.len();
    let mut r = DVector::zeros(n);
    let mut jac = DMatrix::zeros(n, N_PARAMS);
    for (i, (&e, &s)) in energies.iter().zip(sigma).enumerate() {
        r[i] = model.predict(e) - s;
        let g = model.gradient(e);
        for (j, &gj) in g.iter().enumerate() {
            // d/du = gamma d/dgamma
            jac[(i, j)] = if j == 2 { gj * model.gamma } else { gj };
        }
    }
    (r, jac)
}

struct Descent {
    params: Params,
    ssr: f64,
    iterations: usize,
    converged: bool,
    rms_history: Vec<f64>,
}

fn levenberg_marquardt(start: &FanoProfileModel, energies: &[f64], sigma: &[f64], opts: &FitOptions) -> Descent {
    let n = energies.len() as f64;
    let mut p = to_internal(start);
    let mut ssr = sum_sq_residuals(start, energies, sigma);
    let mut lambda = opts.damping_init;
    let mut rms_history = vec![(ssr / n).sqrt()];
    let mut iterations = 0;
    let mut converged = false;

    'outer: while iterations < opts.max_iter {
        let (r, jac) = linearize(&p, energies, sigma);
        let jt = jac.transpose();
        let grad: Vector5<f64> = (&jt * &r).fixed_rows::<N_PARAMS>(0).into_owned();
        if grad.amax() < opts.tol_grad {
            converged = true;
            break;
        }
        let normal: Matrix5<f64> = (&jt * &jac).fixed_view::<N_PARAMS, N_PARAMS>(0, 0).into_owned();
        let diag_floor = 1e-12 * normal.diagonal().max().max(1e-300);

        loop {
            if iterations >= opts.max_iter {
                break 'outer;
            }
            iterations += 1;
            let mut damped = normal;
            for j in 0..N_PARAMS {
                damped[(j, j)] += lambda * normal[(j, j)].max(diag_floor);
            }
            let Some(step) = damped.lu().solve(&(-grad)) else {
                lambda *= 10.0;
                continue;
            };
            let trial = p + step;
            let trial_ssr = sum_sq_residuals(&from_internal(&trial), energies, sigma);
            let rel_step = step.norm() / (p.norm() + opts.tol_step);
            if trial_ssr.is_finite() && trial_ssr < ssr {
                p = trial;
                ssr = trial_ssr;
                lambda = (lambda / 10.0).max(1e-15);
                rms_history.push((ssr / n).sqrt());
                if rel_step < opts.tol_step {
                    converged = true;
                    break 'outer;
                }
                break;
            }
            if rel_step < opts.tol_step {
                // No representable step lowers the objective any further.
                converged = true;
                break 'outer;
            }
            lambda *= 10.0;
            if lambda > 1e30 {
                break 'outer;
            }
        }
    }

    Descent {
        params: p,
        ssr,
        iterations,
        converged,
        rms_history,
    }
}

/// Linearized parameter standard errors `sqrt(diag(s^2 (J^T J)^-1))`.
fn uncertainties(model: &FanoProfileModel, energies: &[f64], sigma: &[f64]) -> [f64; N_PARAMS] {
    let dof = energies.len().saturating_sub(N_PARAMS).max(1) as f64;
    let s2 = sum_sq_residuals(model, energies, sigma) / dof;
    let mut normal = Matrix5::<f64>::zeros();
    for &e in energies {
        let g = Vector5::from(model.gradient(e));
        normal += g * g.transpose();
    }
    let mut out = [f64::NAN; N_PARAMS];
    if let Some(cov) = normal.try_inverse() {
        for (j, o) in out.iter_mut().enumerate() {
            let v = s2 * cov[(j, j)];
            *o = if v >= 0.0 { v.sqrt() } else { f64::NAN };
        }
    }
    out
}

/// Alternative starts tried alongside the heuristic one.
fn start_points(guess: &FanoProfileModel) -> Vec<FanoProfileModel> {
    let mut starts = vec![*guess];
    // Mirror the asymmetry.
    starts.push(FanoProfileModel { q: -guess.q, ..*guess });
    // Symmetric window and symmetric peak around the same centre.
    let swing = guess.amplitude.abs() * (1.0 + guess.q * guess.q);
    starts.push(FanoProfileModel {
        q: 0.0,
        amplitude: swing,
        offset: guess.offset + guess.amplitude - swing,
        ..*guess
    });
    starts.push(FanoProfileModel {
        q: 0.0,
        amplitude: -swing,
        offset: guess.offset + guess.amplitude + swing,
        ..*guess
    });
    starts
}

/// Least-squares fit of a single Fano profile to the whole trace.
///
/// Without an explicit `guess`, the heuristic [`initial_guess`] and a few
/// symmetric variants of it are each refined and the best result is kept.
/// Non-convergence is reported through `converged`, not as an error.
pub fn fit_fano(
    trace: &CrossSectionTrace,
    guess: Option<FanoProfileModel>,
    opts: &FitOptions,
) -> Result<FanoFitResult> {
    let (energies, sigma) = (trace.energies(), trace.sigma());
    if energies.len() < N_PARAMS + 1 {
        return Err(FanoError::InsufficientData {
            needed: N_PARAMS + 1,
            got: energies.len(),
        });
    }
    let starts = match guess {
        Some(g) => {
            if !(g.gamma.is_finite() && g.gamma > 0.0) {
                return Err(FanoError::BadInitialGuess(format!(
                    "gamma must be positive, got {}",
                    g.gamma
                )));
            }
            vec![g]
        }
        None => start_points(&initial_guess(trace)?.model),
    };
    if !sum_sq_residuals(&starts[0], energies, sigma).is_finite() {
        return Err(FanoError::BadInitialGuess(
            "residuals are not finite at the initial guess".into(),
        ));
    }

    let best = starts
        .iter()
        .filter(|s| sum_sq_residuals(s, energies, sigma).is_finite())
        .map(|s| levenberg_marquardt(s, energies, sigma, opts))
        .reduce(|best, d| if d.ssr < best.ssr { d } else { best })
        .expect("the first start is finite");

    let model = from_internal(&best.params).canonical();
    let residual_norm = (sum_sq_residuals(&model, energies, sigma) / energies.len() as f64).sqrt();
    Ok(FanoFitResult {
        model,
        residual_norm,
        iterations: best.iterations,
        converged: best.converged,
        parameter_uncertainties: uncertainties(&model, energies, sigma),
        rms_history: best.rms_history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::EnergyGrid;

    fn synth(m: &FanoProfileModel, lo: f64, hi: f64, n: usize) -> CrossSectionTrace {
        let g = EnergyGrid::new(lo, hi, n).unwrap();
        let e = g.points();
        let s = e.iter().map(|&x| m.predict(x)).collect();
        CrossSectionTrace::from_samples(e, s).unwrap()
    }

    #[test]
    fn predict_examples() {
        let dip = FanoProfileModel::new(0.0, 0.0, 1.0, 1.0, 0.0).unwrap();
        assert_eq!(dip.predict(0.0), 0.0);
        let bw = FanoProfileModel::new(1e3, 0.0, 1.0, 4e-6, 0.0).unwrap();
        assert!((bw.predict(0.0) - 4.0).abs() < 1e-9);
        let m = FanoProfileModel::new(1.0, 0.0, 1.0, 1.0, 0.0).unwrap();
        assert!((m.predict(0.5) - 2.0).abs() < 1e-15);
        assert!(FanoProfileModel::new(1.0, 0.0, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn canonical_form_is_the_same_curve() {
        let m = FanoProfileModel::new(0.7, 0.3, 1.2, -0.8, 2.0).unwrap();
        let c = m.canonical();
        assert!(c.amplitude > 0.0);
        for i in 0..100 {
            let e = -5.0 + 0.1 * i as f64;
            assert!((m.predict(e) - c.predict(e)).abs() < 1e-13);
        }
        assert_eq!(c.canonical(), c);
    }

    #[test]
    fn gradient_matches_central_differences() {
        let m = FanoProfileModel::new(1.7, -0.4, 0.8, 1.3, 0.2).unwrap();
        for &e in &[-2.0, -0.4, 0.1, 0.9, 3.0] {
            let g = m.gradient(e);
            let base = m.to_array();
            for j in 0..N_PARAMS {
                let h = 1e-6 * base[j].abs().max(1.0);
                let mut up = base;
                let mut dn = base;
                up[j] += h;
                dn[j] -= h;
                let f = |a: [f64; 5]| FanoProfileModel::new(a[0], a[1], a[2], a[3], a[4]).unwrap().predict(e);
                let fd = (f(up) - f(dn)) / (2.0 * h);
                assert!(
                    (fd - g[j]).abs() <= 1e-6 * fd.abs().max(1e-3),
                    "param {j}: {fd} vs {}",
                    g[j]
                );
            }
        }
    }

    #[test]
    fn guess_needs_five_points() {
        let t = CrossSectionTrace::from_samples(vec![0.0, 1.0, 2.0, 3.0], vec![1.0; 4]).unwrap();
        assert!(matches!(
            initial_guess(&t),
            Err(FanoError::InsufficientData { needed: 5, got: 4 })
        ));
    }

    #[test]
    fn guess_on_constant_trace_is_degenerate() {
        let e: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let t = CrossSectionTrace::from_samples(e, vec![0.7; 20]).unwrap();
        let g = initial_guess(&t).unwrap();
        assert!(g.degenerate);
        assert_eq!(g.model.amplitude, 0.0);
        assert_eq!(g.model.offset, 0.7);
    }

    #[test]
    fn guess_on_symmetric_dip() {
        let truth = FanoProfileModel::new(0.0, 0.3, 1.0, 1.0, 0.1).unwrap();
        let t = synth(&truth, -5.0, 5.0, 201);
        let g = initial_guess(&t).unwrap();
        assert!(!g.degenerate);
        assert!(g.model.q.abs() < 0.3, "q guess {}", g.model.q);
        assert!((g.model.e0 - 0.3).abs() <= 0.05 + 0.5 * g.model.gamma * g.model.q.abs());
    }

    #[test]
    fn guess_on_symmetric_peak() {
        let truth = FanoProfileModel::new(1e3, -0.5, 0.6, 1e-6, 0.2).unwrap();
        let t = synth(&truth, -5.0, 5.0, 201);
        let g = initial_guess(&t).unwrap();
        assert!((g.model.e0 + 0.5).abs() <= 0.05 + 1e-12);
    }

    #[test]
    fn guess_on_asymmetric_profile() {
        let truth = FanoProfileModel::new(2.0, 0.0, 1.0, 1.0, 0.1).unwrap();
        let t = synth(&truth, -5.0, 5.0, 201);
        let g = initial_guess(&t).unwrap().model;
        assert!(g.q > 0.0);
        assert!((g.e0 - truth.e0).abs() < 0.5 * truth.gamma);
    }

    #[test]
    fn fit_recovers_noiseless_profile() {
        let truth = FanoProfileModel::new(2.0, 0.0, 1.0, 1.0, 0.1).unwrap();
        let t = synth(&truth, -5.0, 5.0, 201);
        let r = fit_fano(&t, None, &FitOptions::default()).unwrap();
        assert!(r.converged);
        assert!(r.residual_norm < 1e-8);
        for (got, want) in r.model.to_array().iter().zip(truth.to_array()) {
            assert!((got - want).abs() <= 1e-6 * want.abs().max(1e-300) || (got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn fit_history_is_monotone() {
        let truth = FanoProfileModel::new(-3.0, 0.4, 0.7, 0.5, 0.3).unwrap();
        let t = synth(&truth, -4.0, 4.0, 161);
        let start = FanoProfileModel::new(-1.0, 0.0, 1.5, 1.0, 0.0).unwrap();
        let r = fit_fano(&t, Some(start), &FitOptions::default()).unwrap();
        assert!(r.rms_history.windows(2).all(|w| w[1] <= w[0]));
        assert!(r.rms_history.len() >= 2);
    }

    #[test]
    fn fit_rejects_short_traces_and_bad_guesses() {
        let e: Vec<f64> = (0..5).map(|i| i as f64).collect();
        let t = CrossSectionTrace::from_samples(e, vec![1.0, 2.0, 3.0, 2.0, 1.0]).unwrap();
        assert!(matches!(
            fit_fano(&t, None, &FitOptions::default()),
            Err(FanoError::InsufficientData { needed: 6, got: 5 })
        ));

        let truth = FanoProfileModel::new(1.0, 0.0, 1.0, 1.0, 0.0).unwrap();
        let t = synth(&truth, -3.0, 3.0, 31);
        let bad = FanoProfileModel {
            q: f64::INFINITY,
            ..truth
        };
        assert!(matches!(
            fit_fano(&t, Some(bad), &FitOptions::default()),
            Err(FanoError::BadInitialGuess(_))
        ));
    }

    #[test]
    fn fit_reports_non_convergence() {
        let truth = FanoProfileModel::new(2.0, 0.0, 1.0, 1.0, 0.1).unwrap();
        let t = synth(&truth, -5.0, 5.0, 201);
        let opts = FitOptions {
            max_iter: 1,
            ..FitOptions::default()
        };
        let start = FanoProfileModel::new(0.5, 1.0, 2.0, 0.5, 0.0).unwrap();
        let r = fit_fano(&t, Some(start), &opts).unwrap();
        assert!(!r.converged);
        assert_eq!(r.iterations, 1);
    }

    #[test]
    fn uncertainties_are_finite_for_noisy_data() {
        let truth = FanoProfileModel::new(1.5, 0.0, 1.0, 1.0, 0.2).unwrap();
        let g = EnergyGrid::new(-5.0, 5.0, 201).unwrap();
        let e = g.points();
        let s: Vec<f64> = e
            .iter()
            .enumerate()
            .map(|(i, &x)| truth.predict(x) + if i % 2 == 0 { 1e-3 } else { -1e-3 })
            .collect();
        let t = CrossSectionTrace::from_samples(e, s).unwrap();
        let r = fit_fano(&t, None, &FitOptions::default()).unwrap();
        assert!(r.parameter_uncertainties.iter().all(|u| u.is_finite() && *u > 0.0));
    }
}
