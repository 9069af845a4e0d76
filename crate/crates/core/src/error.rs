use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(BigInt, BigInt),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a prime modulus, got {0}^{1}")]
    CompositeModulus(BigInt, u32),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(BigInt, BigInt),
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not square-free modulo {0}")]
    NotSquareFree(BigInt),
    #[error("equal-degree splitting made no progress after {0} attempts")]
    SplitFailed(usize),
    #[error("factors are not coprime modulo {0}")]
    NotCoprime(BigInt),
    #[error("{0} divides the leading coefficient")]
    PrimeDividesLeading(BigInt),
    #[error("factors do not multiply to the target modulo {0}")]
    ProductMismatch(BigInt),
    #[error("polynomial is reducible: found factor {0}")]
    FoundFactor(IntPoly),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
