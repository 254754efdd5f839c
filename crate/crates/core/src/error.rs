use thiserror::Error;

pub type Result<T, E = EngineError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("ring context mismatch: d = {left} vs d = {right}")]
    ContextMismatch { left: u32, right: u32 },

    #[error("curve degree d = {0} is not supported: the construction is restricted to d >= 8")]
    DegreeTooSmall(u32),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("series constant term must be 1, got {0}")]
    NonUnitConstant(String),

    #[error("series constant term must be 0, got {0}")]
    NonzeroConstant(String),

    #[error("element is not nilpotent within {0} steps")]
    NotNilpotent(usize),

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("truncation order {got} is below the required {required}")]
    OrderTooSmall { got: usize, required: usize },

    #[error("argument outside the formula's domain: {0}")]
    Domain(String),

    #[error("class is not homogeneous of degree {expected}: {class}")]
    Inhomogeneous { expected: usize, class: String },

    #[error("expected an integer, got {0}")]
    NonIntegral(String),

    #[error("value does not fit in a machine integer: {0}")]
    Overflow(String),
}
