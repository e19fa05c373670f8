use thiserror::Error;

use crate::curve::Curve;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HhcError {
    #[error("invalid quaternary digit {0:?} (expected 0, 1, 2 or 3)")]
    InvalidDigit(char),

    #[error("empty digit string")]
    EmptyDigits,

    #[error("unknown curve index {0} (expected 0..=11)")]
    UnknownCurve(u32),

    #[error("unknown curve name {0:?}")]
    UnknownCurveName(String),

    #[error("{curve} is {actual}, this operation needs a {expected} curve")]
    WrongKind {
        curve: Curve,
        expected: &'static str,
        actual: &'static str,
    },

    #[error("order {order} is below the minimum {min} for {what}")]
    OrderTooSmall {
        order: u32,
        min: u32,
        what: &'static str,
    },

    #[error("order {order} exceeds the maximum {max} for {what}")]
    OrderTooLarge {
        order: u32,
        max: u32,
        what: &'static str,
    },

    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: u64, order: u32 },

    #[error("point {0} is outside the quadrant image of the map")]
    OutsideQuadrant(String),

    #[error("digit range [{start}, {end}] invalid for {len} digits")]
    RangeOutOfBounds { start: usize, end: usize, len: usize },

    #[error("parameters lie in different first-level quadrants ({0} vs {1})")]
    QuadrantMismatch(u8, u8),

    #[error("recursion identity unsupported for {curve}: {reason}")]
    UnsupportedRecursion { curve: Curve, reason: &'static str },

    #[error("reverted parameter is not representable with {0} digits")]
    NotRepresentable(u32),

    #[error("malformed dyadic literal {0:?} (expected n/2^e)")]
    MalformedDyadic(String),

    #[error("malformed parameter {0:?}")]
    MalformedParameter(String),

    #[error("cell ({ix}, {iy}) outside the {side}x{side} grid")]
    InvalidCell { ix: u64, iy: u64, side: u64 },
}

pub type Result<T> = std::result::Result<T, HhcError>;
