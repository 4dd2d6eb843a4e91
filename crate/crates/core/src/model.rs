//! Domain types: resonances, scattering models and energy grids.
//!
//! Energies and widths are dimensionless. A resonance is stored by its real
//! position and width; the complex pole `E - (i/2) Gamma` is derived on demand.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};

/// `arccot` on the branch `(0, pi)`, continuous through `x = 0`.
pub fn arccot(x: f64) -> f64 {
    FRAC_PI_2 - x.atan()
}

/// One pole of the S-matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawResonance")]
pub struct Resonance {
    position: f64,
    width: f64,
}

#[derive(Deserialize)]
struct RawResonance {
    position: f64,
    width: f64,
}

impl TryFrom<RawResonance> for Resonance {
    type Error = FanoError;

    fn try_from(raw: RawResonance) -> Result<Self> {
        Resonance::new(raw.position, raw.width)
    }
}

impl Resonance {
    pub fn new(position: f64, width: f64) -> Result<Self> {
        if !position.is_finite() {
            return Err(FanoError::Validation {
                field: "position",
                reason: format!("must be finite, got {position}"),
            });
        }
        if !width.is_finite() || width <= 0.0 {
            return Err(FanoError::Validation {
                field: "width",
                reason: format!("must be finite and positive, got {width}"),
            });
        }
        Ok(Self { position, width })
    }

    pub fn position(&self) -> f64 {
        self.position
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    /// Complex pole energy `E_k - (i/2) Gamma_k`.
    pub fn complex_energy(&self) -> Complex64 {
        Complex64::new(self.position, -0.5 * self.width)
    }

    /// Reduced energy `2 (E - E_k) / Gamma_k`.
    pub fn epsilon(&self, energy: f64) -> f64 {
        2.0 * (energy - self.position) / self.width
    }

    /// Resonance phase `-arccot(epsilon)`, in `(-pi, 0)` and rising through
    /// `-pi/2` at the resonance position.
    pub fn phase(&self, energy: f64) -> f64 {
        -arccot(self.epsilon(energy))
    }
}

/// Validated constructor, mirroring [`Resonance::new`].
pub fn make_resonance(position: f64, width: f64) -> Result<Resonance> {
    Resonance::new(position, width)
}

/// Ordered resonances plus the background phase of the smooth reaction part.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawModel")]
pub struct ScatteringModel {
    resonances: Vec<Resonance>,
    delta: f64,
}

#[derive(Deserialize)]
struct RawModel {
    resonances: Vec<Resonance>,
    delta: f64,
}

impl TryFrom<RawModel> for ScatteringModel {
    type Error = FanoError;

    fn try_from(raw: RawModel) -> Result<Self> {
        ScatteringModel::new(raw.resonances, raw.delta)
    }
}

impl ScatteringModel {
    pub fn new(resonances: Vec<Resonance>, delta: f64) -> Result<Self> {
        if resonances.is_empty() {
            return Err(FanoError::Validation {
                field: "resonances",
                reason: "must contain at least one resonance".into(),
            });
        }
        if !delta.is_finite() {
            return Err(FanoError::Validation {
                field: "delta",
                reason: format!("must be finite, got {delta}"),
            });
        }
        Ok(Self { resonances, delta })
    }

    /// Two-resonance model from `(position, width)` pairs.
    pub fn pair(first: (f64, f64), second: (f64, f64), delta: f64) -> Result<Self> {
        Self::new(
            vec![Resonance::new(first.0, first.1)?, Resonance::new(second.0, second.1)?],
            delta,
        )
    }

    pub fn resonances(&self) -> &[Resonance] {
        &self.resonances
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn len(&self) -> usize {
        self.resonances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.resonances.is_empty()
    }

    /// Same resonances, different background phase.
    pub fn with_delta(&self, delta: f64) -> Result<Self> {
        Self::new(self.resonances.clone(), delta)
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model serialization is infallible")
    }

    /// Returns the two resonances of a two-resonance model.
    pub(crate) fn as_pair(&self) -> Option<(&Resonance, &Resonance)> {
        match self.resonances.as_slice() {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }
}

/// Uniform energy grid with inclusive endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyGrid {
    e_min: f64,
    e_max: f64,
    n_points: usize,
}

impl EnergyGrid {
    pub fn new(e_min: f64, e_max: f64, n_points: usize) -> Result<Self> {
        if !e_min.is_finite() || !e_max.is_finite() {
            return Err(FanoError::Validation {
                field: "e_min/e_max",
                reason: "grid bounds must be finite".into(),
            });
        }
        if e_min >= e_max {
            return Err(FanoError::Validation {
                field: "e_min/e_max",
                reason: format!("require e_min < e_max, got {e_min} >= {e_max}"),
            });
        }
        if n_points < 2 {
            return Err(FanoError::Validation {
                field: "n_points",
                reason: format!("need at least 2 points, got {n_points}"),
            });
        }
        Ok(Self { e_min, e_max, n_points })
    }

    pub fn e_min(&self) -> f64 {
        self.e_min
    }

    pub fn e_max(&self) -> f64 {
        self.e_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn step(&self) -> f64 {
        (self.e_max - self.e_min) / (self.n_points - 1) as f64
    }

    /// The i-th grid point; the last point is exactly `e_max`.
    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.e_max
        } else {
            self.e_min + i as f64 * self.step()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }
}
