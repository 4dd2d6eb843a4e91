//! Line shapes of overlapping resonances in a single scattering channel.
//!
//! The crate evaluates the S-matrix of a few resonance poles plus a smooth
//! background in four equivalent forms ([`smatrix`]), rewrites the cross
//! section in Fano form with energy-dependent, static and complex asymmetry
//! parameters ([`fano`]), fits single Fano profiles to sampled data ([`fit`])
//! and evaluates everything on energy and phase grids ([`scan`]).

pub mod error;
pub mod fano;
pub mod fit;
pub mod io;
pub mod model;
pub mod scan;
pub mod smatrix;

pub use error::{FanoError, Result};
pub use fano::{
    breit_wigner_energy, double_pole_fano, fano_complex_params, fano_cross_section_complex, fano_cross_section_dynamic,
    fano_cross_section_static, fano_eta, fano_q_dynamic, fano_static_params, window_energy, ComplexFanoParams,
    DoublePoleFano, FanoStaticParams,
};
pub use fit::{fit_fano, initial_guess, FanoFitResult, FanoProfileModel, FitOptions, InitialGuess};
pub use model::{arccot, make_resonance, EnergyGrid, Resonance, ScatteringModel};
pub use scan::{
    compare_representations, contour, figure1, figure2, qscan, trace, ComparisonReport, ContourGrid, CrossSectionTrace,
    TraceMeta,
};
pub use smatrix::{
    coupling_w_dynamic, coupling_w_static, cross_section, cross_section_noninteracting, s_double_pole, s_matrix,
    s_pole, s_unitary_product, CouplingKind, CouplingPair, Representation,
};
