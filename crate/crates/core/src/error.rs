use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid group selector {0:?}")]
    InvalidGroup(String),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("fundamental invariants beyond the Killing form are not tabulated for {0}")]
    UnsupportedInvariants(String),

    #[error("matrix does not preserve the Killing form")]
    NotOrthogonal,

    #[error("matrix is singular")]
    Singular,

    #[error("points are not composable: {0}")]
    NotComposable(String),

    #[error("point violates the ring relations: {0}")]
    InvalidPoint(String),

    #[error("point is outside the requested specialization locus: {0}")]
    OutsideLocus(String),

    #[error("paraboloid is undefined at level kappa = 0")]
    ZeroLevel,

    #[error("chart requires u != 0")]
    ZeroLoopParameter,

    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
