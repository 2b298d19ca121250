use thiserror::Error;

/// Errors raised by the approximation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VpError {
    #[error("point {value} lies outside [-1, 1]")]
    Domain { value: f64 },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("index {index} out of range (expected < {bound})")]
    Index { index: usize, bound: usize },

    #[error("shape mismatch: expected {expected}, got {found}")]
    Shape { expected: String, found: String },

    #[error("non-finite value at position {position}")]
    NonFinite { position: usize },

    #[error("derivative order must be positive, got {0}")]
    Order(usize),

    #[error("weight (gamma = {gamma}, delta = {delta}) is not admissible for the {kind} kind")]
    Inadmissible { kind: &'static str, gamma: f64, delta: f64 },
}

pub type Result<T> = std::result::Result<T, VpError>;

/// Tolerance applied when checking that a point lies in [-1, 1].
pub(crate) const DOMAIN_SLACK: f64 = 1e-14;

pub(crate) fn check_domain(x: f64) -> Result<()> {
    if x.is_finite() && x.abs() <= 1.0 + DOMAIN_SLACK {
        Ok(())
    } else {
        Err(VpError::Domain { value: x })
    }
}

pub(crate) fn check_all_domain(points: &[f64]) -> Result<()> {
    points.iter().try_for_each(|&z| check_domain(z))
}

pub(crate) fn check_finite(values: &[f64]) -> Result<()> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(position) => Err(VpError::NonFinite { position }),
        None => Ok(()),
    }
}

/// `acos` with the argument clamped into [-1, 1].
pub(crate) fn angle_of(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos()
}
