use thiserror::Error;

/// Errors raised by the algebraic engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements belong to different group models")]
    MismatchedGroups,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("trace sum has nonzero imaginary part {0}")]
    NonRealTrace(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("invalid group data: {0}")]
    InvalidGroupData(String),
    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),
    #[error("invalid resolution: {0}")]
    InvalidResolution(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("Ore pair oracle unavailable: {0}")]
    UnsupportedOracle(String),
    #[error("invalid Ore set: {0}")]
    InvalidOreSet(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable identifier used in command-line reports.
    pub fn code(&self) -> &'static str {
        match self {
            Self::MismatchedGroups => "mismatched-groups",
            Self::ShapeMismatch(_) => "shape-mismatch",
            Self::NotIdempotent => "not-idempotent",
            Self::NonRealTrace(_) => "non-real-trace",
            Self::UnsupportedGroup(_) => "unsupported-group",
            Self::InvalidGroupData(_) => "invalid-group-data",
            Self::InvalidComplex(_) => "invalid-complex",
            Self::InvalidResolution(_) => "invalid-resolution",
            Self::NonSquare { .. } => "non-square",
            Self::UnsupportedOracle(_) => "unsupported-oracle",
            Self::InvalidOreSet(_) => "invalid-ore-set",
            Self::DivisionByZero => "division-by-zero",
            Self::VerificationFailed(_) => "verification-failed",
        }
    }
}
