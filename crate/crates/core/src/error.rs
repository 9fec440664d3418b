use alloc::string::String;

use thiserror::Error;

use crate::macaulay::BigCount;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Macaulay coefficients must be strictly decreasing and non-empty")]
    NotDecreasing,
    #[error("Macaulay coefficient does not fit in 64 bits")]
    CoefficientOverflow,
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u64),
    #[error("matrix with {entries} entries exceeds the cap of {cap}")]
    MatrixTooLarge { entries: usize, cap: usize },
    #[error("degree {degree} in {vars} variables needs {size} basis monomials, cap is {cap}")]
    SizeCap { vars: usize, degree: u32, size: BigCount, cap: usize },
    #[error("ambient mismatch: expected {expected} variables over GF({expected_p}), found {found} over GF({found_p})")]
    AmbientMismatch { expected: usize, expected_p: u64, found: usize, found_p: u64 },
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("generator {index} is a constant")]
    ConstantGenerator { index: usize },
    #[error("generator {index} has degree {found}, expected {expected}")]
    WrongDegree { index: usize, expected: u32, found: u32 },
    #[error("zero polynomial or linear form where a nonzero one is required")]
    ZeroForm,
    #[error("linear form has vanishing last coefficient")]
    LastCoefficientZero,
    #[error("restriction of a ring in one variable leaves no variables")]
    NoVariablesLeft,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("counting condition fails: dimension {dim} is not below threshold {threshold}")]
    ConditionNotMet { dim: BigCount, threshold: BigCount },
    #[error("no reduction found after {trials} trials (seed {seed})")]
    NotFound { trials: u32, seed: u64 },
    #[error("search space of {size} tuples exceeds the cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}
