//! One-channel S-matrix in four equivalent forms and the resulting cross section.
//!
//! * `UnitaryProduct`: `exp(2i delta) * prod_k (E - E_k*) / (E - E_k)` for any number of poles.
//! * `PolesStatic`: `1 - i sum_k W_k / (E - E_k)` with energy-independent couplings.
//! * `PolesDynamic`: the same pole sum with energy-dependent couplings `W~_k(E)`.
//! * `DoublePole`: the coalesced limit of two equal poles, including the quadratic term.
//!
//! The pole forms exist only for two resonances and zero background phase.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::model::ScatteringModel;

/// Relative distance between complex poles below which the static couplings are rejected.
pub const DOUBLE_POLE_TOLERANCE: f64 = 1e-9;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Representation {
    #[serde(rename = "product")]
    UnitaryProduct,
    PolesStatic,
    PolesDynamic,
    DoublePole,
}

impl Representation {
    pub const ALL: [Representation; 4] = [
        Representation::UnitaryProduct,
        Representation::PolesStatic,
        Representation::PolesDynamic,
        Representation::DoublePole,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Representation::UnitaryProduct => "product",
            Representation::PolesStatic => "poles-static",
            Representation::PolesDynamic => "poles-dynamic",
            Representation::DoublePole => "double-pole",
        }
    }

    /// Checks the model shape this representation needs.
    pub fn check(self, model: &ScatteringModel) -> Result<()> {
        match self {
            Representation::UnitaryProduct => Ok(()),
            Representation::PolesStatic | Representation::PolesDynamic => {
                if model.len() != 2 {
                    return Err(FanoError::RepresentationPrecondition(format!(
                        "{} needs exactly 2 resonances, model has {}",
                        self.name(),
                        model.len()
                    )));
                }
                if model.delta() != 0.0 {
                    return Err(FanoError::RepresentationPrecondition(format!(
                        "{} needs delta = 0, model has delta = {}",
                        self.name(),
                        model.delta()
                    )));
                }
                Ok(())
            }
            Representation::DoublePole => {
                if model.len() != 1 {
                    return Err(FanoError::RepresentationPrecondition(format!(
                        "double-pole needs exactly 1 (degenerate) pole, model has {}",
                        model.len()
                    )));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Representation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Representation::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| {
            format!("unknown representation `{s}` (expected product, poles-static, poles-dynamic or double-pole)")
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CouplingKind {
    Static,
    Dynamic { energy: f64 },
}

/// Residues `U_1`, `U_2` of the two-pole expansion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingPair {
    pub w1: Complex64,
    pub w2: Complex64,
    pub kind: CouplingKind,
}

/// Unitary product form, valid for any number of resonances and any background phase.
pub fn s_unitary_product(model: &ScatteringModel, energy: f64) -> Complex64 {
    let e = Complex64::from(energy);
    model
        .resonances()
        .iter()
        .map(|r| {
            let pole = r.complex_energy();
            (e - pole.conj()) / (e - pole)
        })
        .fold(Complex64::cis(2.0 * model.delta()), |acc, f| acc * f)
}

fn two_pole_model(model: &ScatteringModel, rep: Representation) -> Result<(Complex64, Complex64, f64, f64)> {
    rep.check(model)?;
    let (a, b) = model.as_pair().expect("checked above");
    Ok((a.complex_energy(), b.complex_energy(), a.width(), b.width()))
}

/// Energy-independent couplings `W_k = G_k (1 - i G_l / (E_k - E_l))` from the
/// standard partial-fraction split
/// `1/((E - E_1)(E - E_2)) = [1/(E - E_1) - 1/(E - E_2)] / (E_1 - E_2)`.
/// Undefined at a double pole.
pub fn coupling_w_static(model: &ScatteringModel) -> Result<CouplingPair> {
    let (p1, p2, g1, g2) = two_pole_model(model, Representation::PolesStatic)?;
    let separation = (p2 - p1).norm();
    if separation < DOUBLE_POLE_TOLERANCE * g1.max(g2) {
        return Err(FanoError::DoublePoleSingularity { separation });
    }
    Ok(CouplingPair {
        w1: g1 * (1.0 - I * g2 / (p1 - p2)),
        w2: g2 * (1.0 - I * g1 / (p2 - p1)),
        kind: CouplingKind::Static,
    })
}

/// Energy-dependent couplings `W~_k(E) = G_k (1 - i G_l / (2E - E_k - E_l))`.
/// The denominator has imaginary part `(G_1 + G_2)/2`, so these stay finite for
/// every real energy, the double pole included.
pub fn coupling_w_dynamic(model: &ScatteringModel, energy: f64) -> Result<CouplingPair> {
    let (p1, p2, g1, g2) = two_pole_model(model, Representation::PolesDynamic)?;
    let denom = 2.0 * energy - p1 - p2;
    Ok(CouplingPair {
        w1: g1 * (1.0 - I * g2 / denom),
        w2: g2 * (1.0 - I * g1 / denom),
        kind: CouplingKind::Dynamic { energy },
    })
}

/// Pole representation `1 - i sum_k U_k / (E - E_k)`.
pub fn s_pole(model: &ScatteringModel, energy: f64, rep: Representation) -> Result<Complex64> {
    let couplings = match rep {
        Representation::PolesStatic => coupling_w_static(model)?,
        Representation::PolesDynamic => coupling_w_dynamic(model, energy)?,
        other => {
            return Err(FanoError::RepresentationPrecondition(format!(
                "s_pole takes poles-static or poles-dynamic, not {other}"
            )))
        }
    };
    let (a, b) = model.as_pair().expect("checked by coupling");
    Ok(s_from_couplings(
        &couplings,
        a.complex_energy(),
        b.complex_energy(),
        energy,
    ))
}

/// Evaluates `1 - i (U_1 / (E - E_1) + U_2 / (E - E_2))` for precomputed couplings.
pub fn s_from_couplings(couplings: &CouplingPair, pole1: Complex64, pole2: Complex64, energy: f64) -> Complex64 {
    let e = Complex64::from(energy);
    Complex64::from(1.0) - I * (couplings.w1 / (e - pole1) + couplings.w2 / (e - pole2))
}

/// S-matrix at a double pole, times the background factor `exp(2i delta)`.
pub fn s_double_pole(e_d: f64, gamma_d: f64, delta: f64, energy: f64) -> Complex64 {
    let z = Complex64::new(energy - e_d, 0.5 * gamma_d);
    let bracket = 1.0 - 2.0 * I * gamma_d / z - gamma_d * gamma_d / (z * z);
    Complex64::cis(2.0 * delta) * bracket
}

/// S-matrix in the requested representation.
pub fn s_matrix(model: &ScatteringModel, energy: f64, rep: Representation) -> Result<Complex64> {
    match rep {
        Representation::UnitaryProduct => Ok(s_unitary_product(model, energy)),
        Representation::PolesStatic | Representation::PolesDynamic => s_pole(model, energy, rep),
        Representation::DoublePole => {
            rep.check(model)?;
            let r = model.resonances()[0];
            Ok(s_double_pole(r.position(), r.width(), model.delta(), energy))
        }
    }
}

/// `sigma = |1 - S|^2`; equals `2 (1 - Re S)` when `|S| = 1`.
pub fn cross_section(s: Complex64) -> f64 {
    (Complex64::from(1.0) - s).norm_sqr()
}

/// Incoherent sum of single-resonance cross sections, each interfering only with
/// the common background: `sum_k 4 sin^2(delta + delta_k(E))`.
pub fn cross_section_noninteracting(model: &ScatteringModel, energy: f64) -> f64 {
    model
        .resonances()
        .iter()
        .map(|r| {
            let s = (model.delta() + r.phase(energy)).sin();
            4.0 * s * s
        })
        .sum()
}
