use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    /// A rational function has an infinite limit at the requested point.
    #[error("pole at {at}")]
    Pole { at: String },

    #[error("singular coefficient c_{mu:?} at rho = {at}")]
    SingularCoefficient { mu: Vec<u32>, at: String },

    #[error("degenerate pairing: 1 - rho^{part} vanishes at rho = {at}")]
    DegeneratePairing { part: u32, at: String },

    #[error("adjoint undefined: 1 - rho^{r} vanishes at rho = {at}")]
    AdjointUndefined { r: u32, at: String },

    /// p_r expansions at a root of unity whose order divides r are refused.
    #[error("power-sum expansion of p_{r} refused at rho = {at} (order divides r)")]
    UnsupportedExpansion { r: u32, at: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}
