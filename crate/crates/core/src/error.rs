use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leg count mismatch: {left} vs {right}")]
    LegMismatch { left: usize, right: usize },
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },
    #[error("{op} does not accept {legs} legs")]
    LegCount { op: &'static str, legs: usize },
    #[error("slot {slot} out of range for {legs} legs")]
    SlotOutOfRange { slot: usize, legs: usize },
    #[error("series argument has a grade-0 term")]
    GradeZeroTerm,
    #[error("element is not invertible by series: grade-0 part is not a nonzero scalar")]
    NotInvertible,
    #[error("grade {grade} out of range for truncation {truncation}")]
    GradeOutOfRange { grade: u32, truncation: u32 },
    #[error("no value assigned to variable {variable}")]
    MissingAssignment { variable: char },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(&'static str),
    #[error("unsupported twist construction: {0}")]
    Unsupported(&'static str),
    #[error("parameter bounds violated: {0}")]
    Bounds(&'static str),
    #[error("inverse-pair precondition violated at grade {grade}")]
    NotInversePair { grade: u32 },
    #[error("unknown target: {0}")]
    UnknownTarget(&'static str),
}
