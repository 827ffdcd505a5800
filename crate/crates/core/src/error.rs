use num_bigint::BigUint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by planning, transforms and the theorem checks.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(BigUint),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: BigUint, right: BigUint },
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: BigUint, modulus: BigUint },
    #[error("value {value} at index {index} is not below the modulus {modulus}")]
    ValueOutOfRange { index: usize, value: BigUint, modulus: BigUint },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("order of {s} modulo {modulus} is {found}, expected {expected}")]
    OrderMismatch { s: String, modulus: String, expected: usize, found: String },
    #[error("existence condition fails at offset d = {0}")]
    ExistenceConditionFailed(usize),
    #[error("regime precondition violated: {0}")]
    RegimeMismatch(String),
    #[error("operation requires the {expected} regime, plan is {actual}")]
    WrongRegime { expected: &'static str, actual: String },
    #[error("no plan found: {0}")]
    NoPlanFound(String),
    #[error("basis change inconsistent at index {index}: kernel route gives {kernel}, direct route gives {direct}")]
    ConsistencyViolation { index: usize, kernel: BigUint, direct: BigUint },
    #[error("Gaussian modulus must be nonzero")]
    ZeroModulus,
    #[error("component at index {index} out of range: |{value}| must be below {bound}")]
    ComponentOutOfRange { index: usize, value: String, bound: BigUint },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
