use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid grid or model configuration (bad sizes, parameters out of range).
    #[error("configuration error: {0}")]
    Config(String),

    /// A mathematically invalid request (vanishing denominator, negative
    /// multiplier power outside a fused symbol, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Two fields live on different grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// An iterative solver stagnated or exceeded its iteration budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// The iteration collapsed to zero (bad initial guess).
    #[error("degenerate initial data: {0}")]
    DegenerateInit(String),

    /// The requested operation cannot be represented on the current grid.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// The discrete spectrum contradicts a structural expectation
    /// (e.g. more than one persistent negative eigenvalue).
    #[error("spectral anomaly: {0}")]
    SpectralAnomaly(String),

    /// Gradient flow failed to decrease the energy after backtracking.
    #[error("flow error: {0}")]
    Flow(String),

    /// The solution left the finite range (blow-up signal); the last finite
    /// state is preserved by the caller.
    #[error("blow-up detected at t = {0}")]
    BlowUp(f64),

    /// Scenario validation failure; all violations joined.
    #[error("invalid scenario:\n{0}")]
    Scenario(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("file format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
