use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("series must have at least one coefficient")]
    EmptySeries,

    #[error("mismatched truncation orders: {0} vs {1}")]
    MismatchedOrders(usize, usize),

    #[error("cannot take derivative {n} of a series of order {order}")]
    OrderTooLow { n: usize, order: usize },

    #[error("transform has no decaying representation: {0}")]
    NonDecayingTransform(String),

    #[error("regularity violation at the origin: {0}")]
    RegularityViolation(String),

    #[error("geometry mismatch: {0}")]
    GeometryMismatch(String),

    #[error("index {index} out of range for expansion with {len} components")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("step {step} exceeds integration range {x_max}")]
    StepTooLarge { step: f64, x_max: f64 },

    #[error("invalid nonlinearity: {0}")]
    InvalidNonlinearity(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("numerical solution diverged at x = {0}")]
    Diverged(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
