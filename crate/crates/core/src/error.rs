use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is singular and cannot be used as a group element")]
    InvalidGroupElement,
    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("projective point has all coordinates zero")]
    ZeroPoint,
    #[error("comparison against a zero matrix is degenerate")]
    DegenerateComparison,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

/// Errors raised by concrete maps and their Lax matrices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    /// The input lies on the pole set of the map.
    #[error("singular input: {0}")]
    SingularInput(String),
    /// The input violates a structural invariant of the field type.
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("singular output: {0}")]
    SingularOutput(String),
    #[error("spectral singularity: {0}")]
    SpectralSingularity(String),
    #[error("unsupported evaluation: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl MapError {
    /// Singular sets are skipped by the checkers rather than counted as
    /// failures; structural errors are not.
    pub fn is_singularity(&self) -> bool {
        matches!(
            self,
            MapError::SingularInput(_)
                | MapError::SingularOutput(_)
                | MapError::SpectralSingularity(_)
                | MapError::Algebra(AlgebraError::InvalidGroupElement)
                | MapError::Algebra(AlgebraError::DivisionByZero)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("site index {index} out of range for a chain of {len} sites")]
    SiteIndex { index: usize, len: usize },
    #[error("chain must contain at least one site")]
    Empty,
    #[error("site {site}: {source}")]
    Site {
        site: usize,
        #[source]
        source: MapError,
    },
    /// `partial` holds the sites as they were when the exchange failed.
    #[error("transfer step aborted at exchange {exchange}: {source}")]
    AbortedStep {
        exchange: usize,
        #[source]
        source: MapError,
        partial: serde_json::Value,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
