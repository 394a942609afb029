use thiserror::Error;

use crate::poly::VarSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable sets differ: {0:?} vs {1:?}")]
    VarSetMismatch(VarSet, VarSet),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("denominator is not invertible as a power series in A, B")]
    NotSeriesInvertible,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("element is not invertible modulo the division polynomial")]
    NotInvertible,
    #[error("multiple {multiple} is outside 1..={max} for level {level}")]
    MultipleOutOfRange { multiple: u32, level: u32, max: u32 },
    #[error("level {0} is not supported (expected 2 or an odd prime)")]
    UnsupportedLevel(u32),
    #[error("basis {kind} is not available for level {level}")]
    UnsupportedBasis { level: u32, kind: String },
    #[error("basis elements are linearly dependent")]
    DependentBasis,
    #[error("product lies outside the span of the basis")]
    OutsideSpan,
    #[error("exact mode is limited to matrix dimension {max}, got {dim}")]
    ExactDimensionUnsupported { dim: usize, max: usize },
    #[error("expected a polynomial trace, found a non-trivial denominator")]
    NonPolynomialTrace,
    #[error("weight {0} must be even and non-negative")]
    InvalidWeight(i64),
    #[error("series truncated at order {have}, need at least {need}")]
    InsufficientTruncation { have: usize, need: usize },
    #[error("series is not in the span of the weight-{0} monomials")]
    InconsistentSystem(u32),
    #[error("truncation too short to determine weight-{0} coordinates")]
    UnderdeterminedSystem(u32),
    #[error("division polynomial index must be positive")]
    InvalidIndex,
    #[error("expected {expected} coordinates, got {got}")]
    WrongLength { expected: usize, got: usize },
}
