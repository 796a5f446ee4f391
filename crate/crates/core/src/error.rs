use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {p}^{m} does not fit in 63 bits")]
    FieldTooLarge { p: u64, m: usize },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid Drinfeld module: {0}")]
    InvalidModule(String),
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: usize },
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;
