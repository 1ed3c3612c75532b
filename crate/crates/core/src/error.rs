use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("catalog has no {name} in {ordering} ordering")]
    CatalogMiss { name: String, ordering: String },

    #[error("{0} is a half-sum generator with no single-generator identification")]
    NoSingleGenerator(String),

    #[error("bracket [{left}, {right}] leaves the span of the basis")]
    NotClosed { left: String, right: String },

    #[error("basis matrices are linearly dependent (rank {rank} < {len})")]
    LinearlyDependent { rank: usize, len: usize },

    #[error("basis labels differ: {0}")]
    LabelMismatch(String),

    #[error("inadmissible oscillator parameters: {0}")]
    InadmissibleParameters(String),

    #[error("matrix is not real: {0}")]
    NotReal(String),

    #[error("matrix is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("invalid symplectic form: {0}")]
    InvalidSymplecticForm(String),

    #[error("ordering mismatch: {0} vs {1}")]
    OrderingMismatch(String, String),

    #[error("covariance is not positive definite")]
    NotPositiveDefinite,

    #[error("covariance is singular")]
    SingularCovariance,

    #[error("Fock cutoff {0} is too small (need at least 4 levels per mode)")]
    TruncationTooSmall(usize),

    #[error("{0} has no ladder-operator realization")]
    NoQuantumRealization(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
