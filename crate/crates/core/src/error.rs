use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("division is not exact")]
    NonExactDivision,
    #[error("cannot evaluate: {0}")]
    DomainError(String),
    #[error("input does not commute with the parabolic generators")]
    NotCentralInput,
    #[error("operands belong to different Coxeter systems")]
    SystemMismatch,
    #[error("weights differ")]
    WeightMismatch,
    #[error("function is not constant on conjugacy classes")]
    NotClassFunction,
    #[error("calibration is not consistent: {0}")]
    InconsistentCalibration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
