use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand {0} is a perfect square")]
    PerfectSquareRadicand(String),
    #[error("radicand {0} is negative")]
    NegativeRadicand(String),
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("no power k <= {bound} of the fundamental unit has q = {q} dividing its sqrt(v)-coefficient")]
    ScanBoundExceeded { q: u64, bound: u64 },
    #[error("{q1} does not divide {q}")]
    InvalidDivisor { q: u64, q1: u64 },
    #[error("gcd({m}, {q}) != 1")]
    NotCoprime { m: i64, q: u64 },
    #[error("{m}/{q} + sqrt({v}) and {n}/{q} + sqrt({v}) are not equivalent")]
    NotEquivalent { v: u64, q: u64, m: i64, n: i64 },
    #[error("matrix row (c, d) is zero")]
    DegenerateRow,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("determinant {0} is not +1 or -1")]
    NotUnimodular(String),
    #[error("({r}, {c}) does not solve r^2 - {v} c^2 = +-1")]
    NotAUnit { v: u64, r: String, c: String },
}

pub type Result<T> = std::result::Result<T, Error>;
