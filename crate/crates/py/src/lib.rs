//! Python bindings for `fano_core`.
//!
//! Errors from the core crate surface as `ValueError` carrying the core message,
//! which starts with the error kind (e.g. `EqualWidthsSingularity: ...`).

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use fano_core as core;
use fano_core::{EnergyGrid, FitOptions, Representation};

fn err(e: core::FanoError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_repr(name: &str) -> PyResult<Representation> {
    name.parse().map_err(PyValueError::new_err)
}

/// One S-matrix pole: real position and positive width.
#[pyclass(name = "Resonance", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyResonance {
    inner: core::Resonance,
}

#[pymethods]
impl PyResonance {
    #[new]
    fn new(position: f64, width: f64) -> PyResult<Self> {
        core::Resonance::new(position, width)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[getter]
    fn position(&self) -> f64 {
        self.inner.position()
    }

    #[getter]
    fn width(&self) -> f64 {
        self.inner.width()
    }

    fn complex_energy(&self) -> Complex64 {
        self.inner.complex_energy()
    }

    fn epsilon(&self, energy: f64) -> f64 {
        self.inner.epsilon(energy)
    }

    fn phase(&self, energy: f64) -> f64 {
        self.inner.phase(energy)
    }

    fn __repr__(&self) -> String {
        format!(
            "Resonance(position={}, width={})",
            self.inner.position(),
            self.inner.width()
        )
    }
}

/// Resonances plus background phase `delta`.
#[pyclass(name = "ScatteringModel", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyScatteringModel {
    inner: core::ScatteringModel,
}

#[pymethods]
impl PyScatteringModel {
    #[new]
    #[pyo3(signature = (resonances, delta = 0.0))]
    fn new(resonances: Vec<PyResonance>, delta: f64) -> PyResult<Self> {
        core::ScatteringModel::new(resonances.into_iter().map(|r| r.inner).collect(), delta)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core::ScatteringModel::from_json(text)
            .map(|inner| Self { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn resonances(&self) -> Vec<PyResonance> {
        self.inner
            .resonances()
            .iter()
            .map(|&inner| PyResonance { inner })
            .collect()
    }

    #[getter]
    fn delta(&self) -> f64 {
        self.inner.delta()
    }

    fn with_delta(&self, delta: f64) -> PyResult<Self> {
        self.inner.with_delta(delta).map(|inner| Self { inner }).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

/// Single Fano profile `amplitude (q + eps)^2 / (eps^2 + 1) + offset`.
#[pyclass(name = "FanoProfile", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyFanoProfile {
    inner: core::FanoProfileModel,
}

#[pymethods]
impl PyFanoProfile {
    #[new]
    fn new(q: f64, e0: f64, gamma: f64, amplitude: f64, offset: f64) -> PyResult<Self> {
        core::FanoProfileModel::new(q, e0, gamma, amplitude, offset)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    #[getter]
    fn q(&self) -> f64 {
        self.inner.q
    }

    #[getter]
    fn e0(&self) -> f64 {
        self.inner.e0
    }

    #[getter]
    fn gamma(&self) -> f64 {
        self.inner.gamma
    }

    #[getter]
    fn amplitude(&self) -> f64 {
        self.inner.amplitude
    }

    #[getter]
    fn offset(&self) -> f64 {
        self.inner.offset
    }

    fn predict(&self, energy: f64) -> f64 {
        self.inner.predict(energy)
    }

    fn __repr__(&self) -> String {
        let m = &self.inner;
        format!(
            "FanoProfile(q={}, e0={}, gamma={}, amplitude={}, offset={})",
            m.q, m.e0, m.gamma, m.amplitude, m.offset
        )
    }
}

/// S-matrix at energy `energy` in representation `repr`
/// (`product`, `poles-static`, `poles-dynamic`, `double-pole`).
#[pyfunction]
#[pyo3(signature = (model, energy, repr = "product"))]
fn s_matrix(model: &PyScatteringModel, energy: f64, repr: &str) -> PyResult<Complex64> {
    core::s_matrix(&model.inner, energy, parse_repr(repr)?).map_err(err)
}

/// `|1 - S(E)|^2`.
#[pyfunction]
#[pyo3(signature = (model, energy, repr = "product"))]
fn cross_section(model: &PyScatteringModel, energy: f64, repr: &str) -> PyResult<f64> {
    s_matrix(model, energy, repr).map(core::cross_section)
}

#[pyfunction]
fn cross_section_noninteracting(model: &PyScatteringModel, energy: f64) -> f64 {
    core::cross_section_noninteracting(&model.inner, energy)
}

#[pyfunction]
fn s_double_pole(e_d: f64, gamma_d: f64, delta: f64, energy: f64) -> Complex64 {
    core::s_double_pole(e_d, gamma_d, delta, energy)
}

/// Energy-independent couplings `(W_1, W_2)`.
#[pyfunction]
fn coupling_w_static(model: &PyScatteringModel) -> PyResult<(Complex64, Complex64)> {
    core::coupling_w_static(&model.inner).map(|c| (c.w1, c.w2)).map_err(err)
}

/// Energy-dependent couplings `(W~_1(E), W~_2(E))`.
#[pyfunction]
fn coupling_w_dynamic(model: &PyScatteringModel, energy: f64) -> PyResult<(Complex64, Complex64)> {
    core::coupling_w_dynamic(&model.inner, energy)
        .map(|c| (c.w1, c.w2))
        .map_err(err)
}

/// `q~_k(E)` for the 0-based resonance index `k`; may be `inf`.
#[pyfunction]
fn fano_q(model: &PyScatteringModel, k: usize, energy: f64) -> PyResult<f64> {
    core::fano_q_dynamic(&model.inner, k, energy).map_err(err)
}

#[pyfunction]
fn fano_cross_section_dynamic(model: &PyScatteringModel, k: usize, energy: f64) -> PyResult<f64> {
    core::fano_cross_section_dynamic(&model.inner, k, energy).map_err(err)
}

/// Static parameters as a dict with keys `q, a1, a2, sigma_a1, sigma_a2, sigma_b`.
#[pyfunction]
fn fano_static_params<'py>(py: Python<'py>, model: &PyScatteringModel) -> PyResult<Bound<'py, PyDict>> {
    let p = core::fano_static_params(&model.inner).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("q", p.q)?;
    d.set_item("a1", p.a1)?;
    d.set_item("a2", p.a2)?;
    d.set_item("sigma_a1", p.sigma_a1)?;
    d.set_item("sigma_a2", p.sigma_a2)?;
    d.set_item("sigma_b", p.sigma_b)?;
    Ok(d)
}

/// Complex Fano parameters `(q_1, q_2)`; raises when some `A_k < 0`.
#[pyfunction]
fn fano_complex_params(model: &PyScatteringModel) -> PyResult<(Complex64, Complex64)> {
    let p = core::fano_static_params(&model.inner).map_err(err)?;
    core::fano_complex_params(&p).map(|c| (c.q1, c.q2)).map_err(err)
}

#[pyfunction]
fn fano_cross_section_static(model: &PyScatteringModel, energy: f64) -> PyResult<f64> {
    let p = core::fano_static_params(&model.inner).map_err(err)?;
    Ok(core::fano_cross_section_static(&p, &model.inner, energy))
}

#[pyfunction]
fn window_energy(model: &PyScatteringModel) -> PyResult<f64> {
    core::window_energy(&model.inner).map_err(err)
}

#[pyfunction]
fn breit_wigner_energy(model: &PyScatteringModel) -> PyResult<f64> {
    core::breit_wigner_energy(&model.inner).map_err(err)
}

/// `(q~_d, sigma)` of the double-pole parametrization.
#[pyfunction]
fn double_pole_fano(e_d: f64, gamma_d: f64, delta: f64, energy: f64) -> PyResult<(f64, f64)> {
    core::double_pole_fano(e_d, gamma_d, delta, energy)
        .map(|r| (r.q_d, r.sigma))
        .map_err(err)
}

/// Cross section on a uniform grid; returns `(energies, sigma)`.
#[pyfunction]
#[pyo3(signature = (model, emin, emax, n, repr = "product"))]
fn trace(model: &PyScatteringModel, emin: f64, emax: f64, n: usize, repr: &str) -> PyResult<(Vec<f64>, Vec<f64>)> {
    let grid = EnergyGrid::new(emin, emax, n).map_err(err)?;
    let t = core::trace(&model.inner, &grid, parse_repr(repr)?).map_err(err)?;
    Ok((t.energies().to_vec(), t.sigma().to_vec()))
}

/// Fits a single Fano profile. Returns a dict with `model`, `residual_norm`,
/// `iterations`, `converged` and `parameter_uncertainties`.
#[pyfunction]
#[pyo3(signature = (energies, sigma, guess = None, max_iter = 200))]
fn fit_fano<'py>(
    py: Python<'py>,
    energies: Vec<f64>,
    sigma: Vec<f64>,
    guess: Option<PyFanoProfile>,
    max_iter: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let t = core::CrossSectionTrace::from_samples(energies, sigma).map_err(err)?;
    let opts = FitOptions {
        max_iter,
        ..FitOptions::default()
    };
    let r = core::fit_fano(&t, guess.map(|g| g.inner), &opts).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("model", PyFanoProfile { inner: r.model })?;
    d.set_item("residual_norm", r.residual_norm)?;
    d.set_item("iterations", r.iterations)?;
    d.set_item("converged", r.converged)?;
    d.set_item("parameter_uncertainties", r.parameter_uncertainties.to_vec())?;
    Ok(d)
}

#[pymodule]
pub fn fano_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyResonance>()?;
    m.add_class::<PyScatteringModel>()?;
    m.add_class::<PyFanoProfile>()?;
    m.add_function(wrap_pyfunction!(s_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(cross_section, m)?)?;
    m.add_function(wrap_pyfunction!(cross_section_noninteracting, m)?)?;
    m.add_function(wrap_pyfunction!(s_double_pole, m)?)?;
    m.add_function(wrap_pyfunction!(coupling_w_static, m)?)?;
    m.add_function(wrap_pyfunction!(coupling_w_dynamic, m)?)?;
    m.add_function(wrap_pyfunction!(fano_q, m)?)?;
    m.add_function(wrap_pyfunction!(fano_cross_section_dynamic, m)?)?;
    m.add_function(wrap_pyfunction!(fano_static_params, m)?)?;
    m.add_function(wrap_pyfunction!(fano_complex_params, m)?)?;
    m.add_function(wrap_pyfunction!(fano_cross_section_static, m)?)?;
    m.add_function(wrap_pyfunction!(window_energy, m)?)?;
    m.add_function(wrap_pyfunction!(breit_wigner_energy, m)?)?;
    m.add_function(wrap_pyfunction!(double_pole_fano, m)?)?;
    m.add_function(wrap_pyfunction!(trace, m)?)?;
    m.add_function(wrap_pyfunction!(fit_fano, m)?)?;
    Ok(())
}
