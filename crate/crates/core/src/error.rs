use thiserror::Error;

/// Errors raised by the spectral engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("singular point on the evaluation contour near x = {x}")]
    SingularPoint { x: f64 },

    #[error("principal branch cut crossed between x = {from} and x = {to}")]
    BranchCutCrossing { from: f64, to: f64 },

    #[error("no parameter branch satisfies the regularity conditions")]
    NoRegularBranch,

    #[error("grid spacing {spacing} exceeds the limit {limit}")]
    GridTooCoarse { spacing: f64, limit: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("function vanishes identically on the grid")]
    EmptyFunction,

    #[error("eigenvalue iteration did not converge: {0}")]
    NoConvergence(String),

    #[error("level (epsilon = {epsilon}, n = {n}) does not exist in the spectrum")]
    LevelNotFound { epsilon: i8, n: usize },
}

pub type Result<T> = std::result::Result<T, SpectraError>;
