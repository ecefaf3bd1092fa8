use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,
    #[error("a denominator factor vanishes identically")]
    DegenerateFactor,
    #[error("rational function has a pole at t = 0")]
    PoleAtZero,
    #[error("tableau is not standard: {0}")]
    NotStandard(String),
    #[error("operation requires a {expected} module, found {found}")]
    FamilyMismatch { expected: String, found: String },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid base vector: {0}")]
    InvalidBaseVector(String),
    #[error("invalid shift: {0}")]
    InvalidShift(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("no separating Gamma element exists: {0}")]
    NotSeparable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
