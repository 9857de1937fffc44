use thiserror::Error;

use crate::rational::Rational;

/// Everything that can go wrong while building or checking expansions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("division by zero")]
    DivisionByZero,

    #[error("continued fraction {0} does not evaluate to a rational number")]
    UndefinedCf(String),

    #[error("a continued fraction needs at least an integral component")]
    EmptyCf,

    #[error("continued fraction terms must be nonzero (term {index} is 0)")]
    ZeroTerm { index: usize },

    #[error("{0} is outside the open interval (0, 1)")]
    OutOfRange(Rational),

    #[error("{0} is not a simple continued fraction")]
    NotSimple(String),

    #[error("invalid substitution mask {0:?}: {1}")]
    InvalidMask(String, &'static str),

    #[error("invalid Conway notation: {0}")]
    InvalidConway(String),

    #[error("cannot parse {input:?} as a fraction: {reason}")]
    Parse { input: String, reason: &'static str },

    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(i64, i64),

    #[error("position {pos} is out of range for a continued fraction with {len} terms")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("substitution at position {pos} violates its side condition: {reason}")]
    SideConditionViolated { pos: usize, reason: &'static str },

    #[error("mask of length {mask} does not match {terms} simple continued fraction terms")]
    MaskLength { mask: usize, terms: usize },

    #[error("subexpansion {remainder} at depth {depth} has absolute value >= 1")]
    SubexpansionBound { remainder: Rational, depth: usize },

    #[error("no all-even boundary slope continued fraction found")]
    SeifertNotFound,

    #[error("{0} all-even boundary slope continued fractions found, expected exactly one")]
    SeifertNotUnique(usize),

    #[error("binary tree and substitution engines disagree for {0}")]
    EnginesDisagree(Rational),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
