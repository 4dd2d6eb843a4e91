//! Grid evaluation: cross-section traces, the (E, delta) contour, the two
//! reference figures, q~-scans and representation comparison reports.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::fano::fano_q_dynamic;
use crate::model::{arccot, EnergyGrid, Resonance, ScatteringModel};
use crate::smatrix::{
    coupling_w_static, cross_section, cross_section_noninteracting, s_double_pole, s_matrix, s_unitary_product,
    Representation,
};

/// Provenance of a trace.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TraceMeta {
    pub representation: Option<Representation>,
    pub model: Option<ScatteringModel>,
    pub delta: Option<f64>,
}

/// Paired energies and cross-section samples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossSectionTrace {
    energies: Vec<f64>,
    sigma: Vec<f64>,
    pub meta: TraceMeta,
}

impl CrossSectionTrace {
    pub fn new(energies: Vec<f64>, sigma: Vec<f64>, meta: TraceMeta) -> Result<Self> {
        if energies.len() != sigma.len() {
            return Err(FanoError::Validation {
                field: "sigma",
                reason: format!("length {} differs from {} energies", sigma.len(), energies.len()),
            });
        }
        if energies.iter().chain(&sigma).any(|v| !v.is_finite()) {
            return Err(FanoError::Validation {
                field: "sigma",
                reason: "all samples must be finite".into(),
            });
        }
        if energies.windows(2).any(|w| w[1] <= w[0]) {
            return Err(FanoError::Validation {
                field: "energies",
                reason: "must be strictly increasing".into(),
            });
        }
        Ok(Self { energies, sigma, meta })
    }

    /// Trace without provenance, e.g. measured data.
    pub fn from_samples(energies: Vec<f64>, sigma: Vec<f64>) -> Result<Self> {
        Self::new(energies, sigma, TraceMeta::default())
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    /// Samples with `lo <= E <= hi`.
    pub fn window(&self, lo: f64, hi: f64) -> Result<Self> {
        let (e, s): (Vec<f64>, Vec<f64>) = self
            .energies
            .iter()
            .zip(&self.sigma)
            .filter(|(&e, _)| e >= lo && e <= hi)
            .map(|(&e, &s)| (e, s))
            .unzip();
        Self::new(e, s, self.meta.clone())
    }
}

/// Cross section over `(delta, E)`; rows are phases, columns energies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContourGrid {
    pub energies: Vec<f64>,
    pub deltas: Vec<f64>,
    /// Row-major, `deltas.len()` rows of `energies.len()` values.
    pub sigma: Vec<f64>,
}

impl ContourGrid {
    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.energies.len();
        &self.sigma[i * n..(i + 1) * n]
    }

    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.sigma[row * self.energies.len() + col]
    }
}

/// Cross section of `model` on `grid` in the chosen representation.
pub fn trace(model: &ScatteringModel, grid: &EnergyGrid, rep: Representation) -> Result<CrossSectionTrace> {
    rep.check(model)?;
    let energies = grid.points();
    let sigma = energies
        .iter()
        .map(|&e| s_matrix(model, e, rep).map(cross_section))
        .collect::<Result<Vec<_>>>()?;
    CrossSectionTrace::new(
        energies,
        sigma,
        TraceMeta {
            representation: Some(rep),
            model: Some(model.clone()),
            delta: Some(model.delta()),
        },
    )
}

/// `q~_k(E)` on a grid; infinite values are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct QScan {
    pub k: usize,
    pub energies: Vec<f64>,
    pub q: Vec<f64>,
}

pub fn qscan(model: &ScatteringModel, k: usize, grid: &EnergyGrid) -> Result<QScan> {
    let energies = grid.points();
    let q = energies
        .iter()
        .map(|&e| fano_q_dynamic(model, k, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(QScan { k, energies, q })
}

/// `sigma(E; delta)` with the resonances of `template` held fixed and the
/// background phase swept uniformly over `[delta_min, delta_max]`.
pub fn contour(
    template: &ScatteringModel,
    grid: &EnergyGrid,
    delta_min: f64,
    delta_max: f64,
    n_delta: usize,
) -> Result<ContourGrid> {
    let axis = EnergyGrid::new(delta_min, delta_max, n_delta).map_err(|_| FanoError::Validation {
        field: "delta range",
        reason: format!(
            "need finite delta_min < delta_max and n_delta >= 2, got [{delta_min}, {delta_max}] x {n_delta}"
        ),
    })?;
    let energies = grid.points();
    let deltas = axis.points();
    let mut sigma = Vec::with_capacity(energies.len() * deltas.len());
    for &d in &deltas {
        let m = template.with_delta(d)?;
        sigma.extend(energies.iter().map(|&e| cross_section(s_unitary_product(&m, e))));
    }
    Ok(ContourGrid {
        energies,
        deltas,
        sigma,
    })
}

/// Background phases of the four double-pole panels.
pub const FIGURE1_DELTAS: [f64; 4] = [0.0, FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4];

#[derive(Debug, Clone, PartialEq)]
pub struct Figure1Panel {
    pub delta: f64,
    /// Double pole, including the quadratic term.
    pub full: CrossSectionTrace,
    /// Two identical resonances added incoherently.
    pub dashed: CrossSectionTrace,
}

/// Default energy window for the double-pole figure: `E_d +- 5 Gamma_d`, 1001 points, `E_d = 0`.
pub fn figure1_default_grid(gamma_d: f64) -> Result<EnergyGrid> {
    EnergyGrid::new(-5.0 * gamma_d, 5.0 * gamma_d, 1001)
}

/// The double-pole line shapes at `delta = 0, pi/4, pi/2, 3pi/4` with `E_d = 0`.
pub fn figure1(gamma_d: f64, grid: &EnergyGrid) -> Result<Vec<Figure1Panel>> {
    let pole = Resonance::new(0.0, gamma_d)?;
    let energies = grid.points();
    FIGURE1_DELTAS
        .iter()
        .map(|&delta| {
            let single = ScatteringModel::new(vec![pole], delta)?;
            let pair = ScatteringModel::new(vec![pole, pole], delta)?;
            let full = energies
                .iter()
                .map(|&e| cross_section(s_double_pole(0.0, gamma_d, delta, e)))
                .collect();
            let dashed = energies
                .iter()
                .map(|&e| cross_section_noninteracting(&pair, e))
                .collect();
            Ok(Figure1Panel {
                delta,
                full: CrossSectionTrace::new(
                    energies.clone(),
                    full,
                    TraceMeta {
                        representation: Some(Representation::DoublePole),
                        model: Some(single),
                        delta: Some(delta),
                    },
                )?,
                dashed: CrossSectionTrace::new(
                    energies.clone(),
                    dashed,
                    TraceMeta {
                        representation: None,
                        model: Some(pair),
                        delta: Some(delta),
                    },
                )?,
            })
        })
        .collect()
}

/// Narrow resonance at 0 with width 0.1, broad one at 0.5 with width 1.
pub fn figure2_model(delta: f64) -> Result<ScatteringModel> {
    ScatteringModel::pair((0.0, 0.1), (0.5, 1.0), delta)
}

/// Offset of the companion curves from `delta_0`, in radians.
pub const FIGURE2_COMPANION_OFFSET: f64 = 0.5;

pub fn figure2_default_grid() -> Result<EnergyGrid> {
    EnergyGrid::new(-1.0, 1.5, 1001)
}

/// Number of contour rows, covering `[0, pi)`.
pub const FIGURE2_CONTOUR_ROWS: usize = 181;

#[derive(Debug, Clone, PartialEq)]
pub struct Figure2Variant {
    pub delta0: f64,
    /// Traces at `delta0`, `delta0 - 0.5` and `delta0 + 0.5`.
    pub full: CrossSectionTrace,
    pub dashed: CrossSectionTrace,
    pub dotted: CrossSectionTrace,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure2 {
    /// `delta0 = -arctan eps_2(E_1)`: the narrow state shows up as a window.
    pub window: Figure2Variant,
    /// `delta0 = arccot eps_2(E_1)`: the narrow state shows up as a Breit-Wigner peak.
    pub breit_wigner: Figure2Variant,
    pub contour: ContourGrid,
}

fn figure2_variant(delta0: f64, grid: &EnergyGrid) -> Result<Figure2Variant> {
    let at = |d: f64| trace(&figure2_model(d)?, grid, Representation::UnitaryProduct);
    Ok(Figure2Variant {
        delta0,
        full: at(delta0)?,
        dashed: at(delta0 - FIGURE2_COMPANION_OFFSET)?,
        dotted: at(delta0 + FIGURE2_COMPANION_OFFSET)?,
    })
}

/// Narrow resonance overlapped by a broad one, interfering with the background.
pub fn figure2(grid: &EnergyGrid) -> Result<Figure2> {
    let base = figure2_model(0.0)?;
    let (narrow, broad) = (base.resonances()[0], base.resonances()[1]);
    let eps2 = broad.epsilon(narrow.position());
    let step = PI / FIGURE2_CONTOUR_ROWS as f64;
    Ok(Figure2 {
        window: figure2_variant(-eps2.atan(), grid)?,
        breit_wigner: figure2_variant(arccot(eps2), grid)?,
        contour: contour(&base, grid, 0.0, PI - step, FIGURE2_CONTOUR_ROWS)?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDeviation {
    pub first: Representation,
    pub second: Representation,
    pub max_abs_dev: f64,
    pub argmax_energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Inapplicable {
    pub representation: Representation,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub model: ScatteringModel,
    pub n_points: usize,
    pub deviations: Vec<PairDeviation>,
    pub inapplicable: Vec<Inapplicable>,
}

/// Relative pole separation below which the static pole form is reported as
/// inapplicable: closer poles make `W_k` large enough that the pole sum loses
/// the agreement guaranteed above this separation.
pub const STATIC_EQUIVALENCE_SEPARATION: f64 = 1e-6;

/// Maximum pairwise `|S_a - S_b|` over the grid for every applicable representation.
pub fn compare_representations(model: &ScatteringModel, grid: &EnergyGrid) -> Result<ComparisonReport> {
    Representation::PolesDynamic.check(model)?;
    let (r1, r2) = (model.resonances()[0], model.resonances()[1]);
    let separation = (r1.complex_energy() - r2.complex_energy()).norm();
    let scale = r1.width().max(r2.width());

    let mut reps = vec![Representation::UnitaryProduct];
    let mut inapplicable = Vec::new();
    match coupling_w_static(model) {
        Err(e) => inapplicable.push(Inapplicable {
            representation: Representation::PolesStatic,
            reason: e.to_string(),
        }),
        Ok(_) if separation < STATIC_EQUIVALENCE_SEPARATION * scale => inapplicable.push(Inapplicable {
            representation: Representation::PolesStatic,
            reason: format!(
                "near double pole: |E1 - E2| = {separation:e} below {STATIC_EQUIVALENCE_SEPARATION:e} x max width"
            ),
        }),
        Ok(_) => reps.push(Representation::PolesStatic),
    }
    reps.push(Representation::PolesDynamic);
    inapplicable.push(Inapplicable {
        representation: Representation::DoublePole,
        reason: "describes one degenerate pole, not a pair".into(),
    });

    let energies = grid.points();
    let values = reps
        .iter()
        .map(|&rep| {
            energies
                .iter()
                .map(|&e| s_matrix(model, e, rep))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut deviations = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let (max_abs_dev, idx) = values[i]
                .iter()
                .zip(&values[j])
                .map(|(a, b)| (a - b).norm())
                .enumerate()
                .fold((0.0, 0), |(m, mi), (k, d)| if d > m { (d, k) } else { (m, mi) });
            deviations.push(PairDeviation {
                first: reps[i],
                second: reps[j],
                max_abs_dev,
                argmax_energy: energies[idx],
            });
        }
    }
    Ok(ComparisonReport {
        model: model.clone(),
        n_points: energies.len(),
        deviations,
        inapplicable,
    })
}
