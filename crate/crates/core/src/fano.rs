//! Fano parametrizations of the cross section.
//!
//! Three ways of writing the same line shape near a narrow resonance:
//!
//! * the energy-dependent parameter `q~_k(E) = -cot eta(E)`, where `eta` collects the
//!   background phase and the phases of every other resonance;
//! * the static two-resonance parameter set `{q, A_k, sigma_ak, sigma_b}`, energy
//!   independent but singular at equal widths and at a double pole;
//! * the complex parameters `q_k = q + i sqrt(A_k)`, available when both `A_k >= 0`.
//!
//! Plus the double-pole parametrization and the energies at which the narrow
//! resonance shows up as a window (q~ = 0) or as a symmetric Breit-Wigner peak (|q~| = inf).

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::model::{Resonance, ScatteringModel};
use crate::smatrix::DOUBLE_POLE_TOLERANCE;

/// Relative width difference below which the static parameter `q` is rejected.
pub const EQUAL_WIDTHS_TOLERANCE: f64 = 1e-9;

/// Distance (rad) of `delta` from a pole of `tan`/`cot` treated as "on" the pole.
const PHASE_POLE_TOLERANCE: f64 = 1e-12;

/// Energy-independent parameter set of the two-resonance cross section.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FanoStaticParams {
    pub q: f64,
    pub a1: f64,
    pub a2: f64,
    pub sigma_a1: f64,
    pub sigma_a2: f64,
    pub sigma_b: f64,
}

impl FanoStaticParams {
    /// `sigma_a1 + sigma_a2 + sigma_b`, zero up to rounding.
    pub fn sum_rule_residual(&self) -> f64 {
        self.sigma_a1 + self.sigma_a2 + self.sigma_b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexFanoParams {
    pub q1: Complex64,
    pub q2: Complex64,
}

fn resonance_at(model: &ScatteringModel, k: usize) -> Result<&Resonance> {
    model.resonances().get(k).ok_or_else(|| FanoError::Validation {
        field: "k",
        reason: format!("resonance index {k} out of range for {} resonances", model.len()),
    })
}

/// `eta(E) = delta + sum_{l != k} delta_l(E)`: everything resonance `k` interferes with.
pub fn fano_eta(model: &ScatteringModel, k: usize, energy: f64) -> Result<f64> {
    resonance_at(model, k)?;
    Ok(model.delta()
        + model
            .resonances()
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, r)| r.phase(energy))
            .sum::<f64>())
}

/// Energy-dependent Fano parameter `q~_k(E) = -cot eta(E)`.
///
/// Signed infinities are legal results: they mark the points where the
/// line shape of resonance `k` reverses its asymmetry through a symmetric peak.
pub fn fano_q_dynamic(model: &ScatteringModel, k: usize, energy: f64) -> Result<f64> {
    let eta = fano_eta(model, k, energy)?;
    Ok(-eta.cos() / eta.sin())
}

/// Cross section written around resonance `k` as `4 sin^2(eta) (q~_k + eps_k)^2 / (eps_k^2 + 1)`,
/// evaluated as `4 (eps_k sin eta - cos eta)^2 / (eps_k^2 + 1)` so that infinite `q~_k`
/// needs no special casing. Exact at every energy, not just near `E_k`.
pub fn fano_cross_section_dynamic(model: &ScatteringModel, k: usize, energy: f64) -> Result<f64> {
    let eta = fano_eta(model, k, energy)?;
    let eps = model.resonances()[k].epsilon(energy);
    let t = eps * eta.sin() - eta.cos();
    Ok(4.0 * t * t / (eps * eps + 1.0))
}

/// Static parameters `q = eps_12`, `A_k`, `sigma_ak`, `sigma_b` of a two-resonance model
/// with zero background phase.
pub fn fano_static_params(model: &ScatteringModel) -> Result<FanoStaticParams> {
    let (r1, r2) = model.as_pair().ok_or_else(|| {
        FanoError::RepresentationPrecondition(format!(
            "static Fano parameters need exactly 2 resonances, model has {}",
            model.len()
        ))
    })?;
    if model.delta() != 0.0 {
        return Err(FanoError::RepresentationPrecondition(format!(
            "static Fano parameters need delta = 0, model has delta = {}",
            model.delta()
        )));
    }
    let (g1, g2) = (r1.width(), r2.width());
    let scale = g1.max(g2);
    let separation = (r1.complex_energy() - r2.complex_energy()).norm();
    if separation < DOUBLE_POLE_TOLERANCE * scale {
        return Err(FanoError::DoublePoleSingularity { separation });
    }
    if (g1 - g2).abs() < EQUAL_WIDTHS_TOLERANCE * scale {
        return Err(FanoError::EqualWidthsSingularity { width1: g1, width2: g2 });
    }

    let q = 2.0 * (r1.position() - r2.position()) / (g1 - g2);
    let q2p1 = q * q + 1.0;
    let one_minus = 2.0 * (1.0 - q * q);
    Ok(FanoStaticParams {
        q,
        a1: g1 / g2 * q2p1 + one_minus,
        a2: g2 / g1 * q2p1 + one_minus,
        sigma_a1: 4.0 * g2 / ((g1 - g2) * q2p1),
        sigma_a2: 4.0 * g1 / ((g2 - g1) * q2p1),
        sigma_b: 4.0 / q2p1,
    })
}

/// Two-resonance cross section from the static parameters.
pub fn fano_cross_section_static(params: &FanoStaticParams, model: &ScatteringModel, energy: f64) -> f64 {
    let rs = model.resonances();
    let term = |sigma_a: f64, a: f64, r: &Resonance| {
        let eps = r.epsilon(energy);
        let qe = params.q + eps;
        sigma_a * (qe * qe + a) / (eps * eps + 1.0)
    };
    term(params.sigma_a1, params.a1, &rs[0]) + term(params.sigma_a2, params.a2, &rs[1]) + params.sigma_b
}

/// Complex Fano parameters `q_k = q + i sqrt(A_k)`.
pub fn fano_complex_params(params: &FanoStaticParams) -> Result<ComplexFanoParams> {
    for (index, value) in [(1, params.a1), (2, params.a2)] {
        if value < 0.0 {
            return Err(FanoError::NegativeAk { index, value });
        }
    }
    Ok(ComplexFanoParams {
        q1: Complex64::new(params.q, params.a1.sqrt()),
        q2: Complex64::new(params.q, params.a2.sqrt()),
    })
}

/// Cross section `sum_k sigma_ak |q_k + eps_k|^2 / (eps_k^2 + 1) + sigma_b`.
pub fn fano_cross_section_complex(
    complex: &ComplexFanoParams,
    params: &FanoStaticParams,
    model: &ScatteringModel,
    energy: f64,
) -> f64 {
    let rs = model.resonances();
    let term = |sigma_a: f64, qk: Complex64, r: &Resonance| {
        let eps = r.epsilon(energy);
        sigma_a * (qk + eps).norm_sqr() / (eps * eps + 1.0)
    };
    term(params.sigma_a1, complex.q1, &rs[0]) + term(params.sigma_a2, complex.q2, &rs[1]) + params.sigma_b
}

/// `delta` folded into `(-pi/2, pi/2]`.
fn fold_phase(delta: f64) -> f64 {
    let r = delta - PI * (delta / PI).round();
    if r <= -FRAC_PI_2 {
        r + PI
    } else {
        r
    }
}

fn perturber(model: &ScatteringModel) -> Result<&Resonance> {
    model.as_pair().map(|(_, b)| b).ok_or_else(|| {
        FanoError::RepresentationPrecondition(format!(
            "condition energies need exactly 2 resonances (narrow, broad), model has {}",
            model.len()
        ))
    })
}

/// Energy `E_2 - (G_2/2) tan delta` at which `q~_1` vanishes: the narrow
/// resonance appears as a window (dip) when this lies near `E_1`.
pub fn window_energy(model: &ScatteringModel) -> Result<f64> {
    let broad = perturber(model)?;
    let folded = fold_phase(model.delta());
    if (folded.abs() - FRAC_PI_2).abs() < PHASE_POLE_TOLERANCE {
        return Err(FanoError::NoFiniteSolution(format!(
            "tan(delta) is infinite for delta = {}",
            model.delta()
        )));
    }
    Ok(broad.position() - 0.5 * broad.width() * folded.tan())
}

/// Energy `E_2 + (G_2/2) cot delta` at which `|q~_1|` is infinite: the narrow
/// resonance appears as a symmetric Breit-Wigner peak when this lies near `E_1`.
pub fn breit_wigner_energy(model: &ScatteringModel) -> Result<f64> {
    let broad = perturber(model)?;
    let folded = fold_phase(model.delta());
    if folded.abs() < PHASE_POLE_TOLERANCE {
        return Err(FanoError::NoFiniteSolution(format!(
            "cot(delta) is infinite for delta = {}",
            model.delta()
        )));
    }
    Ok(broad.position() + 0.5 * broad.width() / folded.tan())
}

/// Double-pole line shape as a Fano-like profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DoublePoleFano {
    pub q_d: f64,
    pub sigma: f64,
}

/// `q~_d(E) = (1 - eps_d^2) tan(delta) / 2` and
/// `sigma = 16 cos^2(delta) (q~_d + eps_d)^2 / (eps_d^2 + 1)^2`.
///
/// `sigma` is evaluated as `4 (sin delta (1 - eps^2) + 2 eps cos delta)^2 / (eps^2 + 1)^2`,
/// which stays finite where `tan delta` does not.
pub fn double_pole_fano(e_d: f64, gamma_d: f64, delta: f64, energy: f64) -> Result<DoublePoleFano> {
    if !(gamma_d.is_finite() && gamma_d > 0.0) {
        return Err(FanoError::Validation {
            field: "gamma_d",
            reason: format!("must be finite and positive, got {gamma_d}"),
        });
    }
    let eps = 2.0 * (energy - e_d) / gamma_d;
    let lin = 1.0 - eps * eps;
    let folded = fold_phase(delta);
    let q_d = if lin == 0.0 {
        0.0
    } else if (folded.abs() - FRAC_PI_2).abs() < PHASE_POLE_TOLERANCE {
        f64::INFINITY.copysign(lin * folded.signum())
    } else {
        0.5 * lin * folded.tan()
    };
    let (s, c) = delta.sin_cos();
    let t = s * lin + 2.0 * eps * c;
    let d = eps * eps + 1.0;
    Ok(DoublePoleFano {
        q_d,
        sigma: 4.0 * t * t / (d * d),
    })
}
