use thiserror::Error;

/// Every failure mode of the library.
///
/// Numeric diagnostics are carried as decimal strings so the error type stays
/// independent of the scalar the caller computes with.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base b = {b} must be at least 2")]
    BaseTooSmall { b: String },

    #[error("length n = {n} must be at least 2")]
    LengthTooSmall { n: usize },

    #[error("shift a = {a} must be positive")]
    ShiftNotPositive { a: String },

    #[error("gcd(r_b(n), a) = gcd({a1}, {a}) = {gcd}, so the generators do not span a numerical semigroup")]
    NotCoprime { a1: String, a: String, gcd: String },

    #[error("arithmetic overflow in {op}")]
    Overflow { op: &'static str },

    #[error("{what}: {requested} exceeds the capacity limit {cap}")]
    Capacity {
        what: &'static str,
        requested: String,
        cap: u64,
    },

    #[error("lattice operations need n >= 3, got n = {n}")]
    UnsupportedDimension { n: usize },

    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),

    #[error("generating set is empty or contains zero")]
    BadGenerators,

    #[error("generators have gcd {gcd}, not 1")]
    GcdNotOne { gcd: u64 },

    #[error("{x} is not an element of the semigroup")]
    NotInSemigroup { x: u64 },

    #[error("oracle cross-check failed: {0}")]
    OracleInconsistent(String),

    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

impl Error {
    /// True for the failures that stem from size or range limits rather than
    /// from the inputs being wrong.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Overflow { .. } | Error::Capacity { .. })
    }

    /// True for parameter-validation failures.
    pub fn is_invalid_params(&self) -> bool {
        matches!(
            self,
            Error::BaseTooSmall { .. }
                | Error::LengthTooSmall { .. }
                | Error::ShiftNotPositive { .. }
                | Error::NotCoprime { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
