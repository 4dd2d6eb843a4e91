use thiserror::Error;

/// Errors raised by the resonance, S-matrix, Fano and fitting routines.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum FanoError {
    /// A constructor argument violates a type invariant.
    #[error("ValidationError: field `{field}` {reason}")]
    Validation { field: &'static str, reason: String },

    /// The two complex pole energies coincide, so the energy-independent
    /// couplings and static Fano parameters do not exist.
    #[error("DoublePoleSingularity: complex energies coincide (|E1 - E2| = {separation:e})")]
    DoublePoleSingularity { separation: f64 },

    /// Equal widths make the static Fano parameter q undefined.
    #[error("EqualWidthsSingularity: widths coincide ({width1} vs {width2})")]
    EqualWidthsSingularity { width1: f64, width2: f64 },

    /// A_k < 0, so sqrt(A_k) and the complex Fano parameter q_k are not real-valued.
    #[error("NegativeAkError: A_{index} = {value} is negative")]
    NegativeAk { index: usize, value: f64 },

    /// A condition energy is infinite for the requested background phase.
    #[error("NoFiniteSolution: {0}")]
    NoFiniteSolution(String),

    /// The requested representation cannot be evaluated for this model.
    #[error("RepresentationPrecondition: {0}")]
    RepresentationPrecondition(String),

    #[error("InsufficientData: need at least {needed} points, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("BadInitialGuess: {0}")]
    BadInitialGuess(String),
}

pub type Result<T> = std::result::Result<T, FanoError>;
