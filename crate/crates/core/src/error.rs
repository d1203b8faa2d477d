use thiserror::Error;

use crate::point::ParamPoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CgError {
    #[error("{0} is outside the coefficient domain")]
    Domain(ParamPoint),

    #[error("invalid matrix parameters (m, n, k) = ({m}, {n}, {k}): need 0 <= k <= min(m, n)")]
    Shape { m: i64, n: i64, k: i64 },

    #[error("malformed Regge symbol: {0}")]
    MalformedSymbol(String),

    #[error("closed form only available for k <= 2, got k = {0}")]
    UnsupportedK(i64),

    #[error("parity requirement not met: {0}")]
    Parity(String),

    #[error("lattice radius {radius} not available: {reason}")]
    Radius { radius: usize, reason: String },

    #[error("family condition not met: {0}")]
    Condition(String),

    #[error("singular formula: {0}")]
    Singular(String),

    #[error("{0} is not a zero of its coefficient matrix")]
    NotAZero(ParamPoint),

    #[error("resource cap exceeded: estimated {estimated_mb} MiB > cap {cap_mb} MiB")]
    Resource { estimated_mb: u64, cap_mb: u64 },
}

pub type Result<T> = std::result::Result<T, CgError>;
