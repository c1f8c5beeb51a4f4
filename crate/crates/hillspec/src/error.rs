use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the spectral routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation order must be at least 2 (got {0})")]
    InvalidTruncation(usize),

    #[error("eigenvalue iteration failed to converge at index {index}")]
    Convergence { index: usize },

    #[error("{lambda} is not an eigenvalue of the finite section (residual {residual:.3e})")]
    NoEigenvector { lambda: Complex64, residual: f64 },

    #[error("leading coefficient magnitude {value:.3e} below threshold; solver or truncation fault")]
    DegenerateLeadingCoefficient { value: f64 },

    #[error("distance from lambda to the index set vanishes; tail bound undefined")]
    DivisionGuard,

    #[error("integration step size underflow")]
    Stiffness,

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("root localization failed on [{re_min}, {re_max}] x [{im_min}, {im_max}] (expected {expected}, resolved {resolved})")]
    LocalizationFailure {
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
        expected: i64,
        resolved: i64,
    },

    #[error("could not refine winding radius near lambda = {lambda}")]
    RadiusRefinement { lambda: Complex64 },

    #[error("inconsistent classification at lambda = {lambda} (u = {u}, v = {v}, s = {s})")]
    InconsistentClassification {
        lambda: Complex64,
        u: usize,
        v: usize,
        s: usize,
    },

    #[error("cross-validation failure; unmatched eigenvalues: {orphans:?}")]
    CrossValidation { orphans: Vec<Complex64> },

    #[error("prerequisite certificate {0} did not verify")]
    Dependency(String),

    #[error("parameter a must be nonzero")]
    DegenerateParameter,
}

pub type Result<T> = std::result::Result<T, Error>;
