use alloc::string::String;

use crate::clan::Signature;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid signature ({p},{q}): p + q must be at least 1")]
    InvalidSignature { p: usize, q: usize },
    #[error("empty clan string")]
    Empty,
    #[error("invalid clan symbol {0:?}; expected '+', '-' or a positive arc label")]
    InvalidSymbol(String),
    #[error("arc label {label} occurs {count} time(s); every label must occur exactly twice")]
    UnmatchedArcLabel { label: usize, count: usize },
    #[error(
        "clan has {plus} '+' and {minus} '-' signs, which does not balance signature {signature}"
    )]
    SignatureMismatch {
        signature: Signature,
        plus: usize,
        minus: usize,
    },
    #[error("expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("inconsistent rank profile: {0}")]
    InconsistentProfile(String),
    #[error("clans {bottom} and {top} are not comparable as bottom <= top")]
    NotComparable { bottom: String, top: String },
    #[error("clan {0} is not part of this poset")]
    UnknownClan(String),
    #[error("move closure disagrees with rank-number order: {0}")]
    OrderMismatch(String),
    #[error("degeneration curve check failed: {0}")]
    CaseMismatch(String),
    #[error("move {0} does not apply to the given clan")]
    MoveNotApplicable(String),
    #[error("flag basis is singular")]
    SingularFlag,
    #[error("flag has dimension {found}, signature requires {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid representative data: {0}")]
    InvalidRepresentative(String),
    #[error("curve parameter must be nonzero")]
    ZeroSample,
}

pub type Result<T> = core::result::Result<T, Error>;
