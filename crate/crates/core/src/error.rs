use thiserror::Error;

/// Errors raised by field construction, polynomial algebra and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("prime {0} exceeds the supported bound of 2^32")]
    PrimeTooLarge(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("modulus is not a monic irreducible polynomial of degree {degree} over F_{p}")]
    InvalidModulus { p: u64, degree: usize },

    #[error("operands belong to different fields")]
    ContextMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("element encoding {0} is out of range for the field")]
    EncodingOutOfRange(String),

    #[error("matrix is singular")]
    Singular,

    /// The binomial permutation criterion fails; `value` is the encoding of
    /// `(-1)^(n/d) * Nor_{n:d}(a)`, which equals 1.
    #[error("permutation criterion (-1)^(n/d) * Nor_{{n:d}}(a) != 1 violated: (-1)^(n/d) * Nor_{{n:d}}(a) = {value}")]
    CriterionViolated { value: String },

    #[error("no closed-form specialization applies to r = {r}, n = {n}")]
    UnsupportedShape { r: usize, n: usize },

    #[error("field of order {order} exceeds the exhaustive-check capacity {cap}")]
    Capacity { order: String, cap: u64 },

    #[error("polynomial is not a permutation of the field")]
    NotPermutation,

    #[error("no permutation binomial found after {attempts} samples")]
    Sampling { attempts: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
