use thiserror::Error;

/// Errors surfaced by the verification engine.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not special unitary (residual {residual:.3e})")]
    InvalidUnitary { residual: f64 },

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("index {index} out of range (or repeated) for rank {n}")]
    IndexError { index: usize, n: usize },

    #[error("invalid tangent: {0}")]
    InvalidTangent(String),

    #[error("lifts lie over different base points (residual {residual:.3e})")]
    FiberMismatch { residual: f64 },

    #[error("point within {separation:.3e} rad of the branch cut")]
    OnBranchCut { separation: f64 },

    #[error("value {value} is {distance:.3e} away from the nearest integer")]
    NotInteger { value: f64, distance: f64 },

    #[error("form degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("cochain arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("form requires a point on the {needed} cover")]
    CoverMismatch { needed: &'static str },

    #[error("sphere chart out of range: theta = {theta}")]
    ChartOutOfRange { theta: f64 },

    #[error("rank n = {n} unsupported (supported range 2..=8)")]
    RankOutOfRange { n: usize },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
