//! Arithmetic (closed-form) representation of all twelve curves.

mod improper;
mod proper;
mod recursion;
mod transfer;

use serde::Serialize;

pub use improper::{eval_improper, reversal_constant, reversal_transform};
pub use proper::{
    count03, count03_polynomial, count3, count3_polynomial, eval_proper, eval_proper_fast,
    eval_proper_nested, limit_error_bound_squared,
};
pub use recursion::{
    recurse_closed_form, recurse_closed_form_with, recurse_improper, recurse_shift,
    ClosedFormReading, Parity,
};
pub use transfer::{transfer_distance_check, transfer_point};

use crate::curve::Curve;
use crate::dyadic::DyadicVec2;
use crate::error::Result;
use crate::quaternary::QuaternaryFraction;

/// A curve point together with the parameter that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalResult {
    pub point: DyadicVec2,
    pub curve: Curve,
    pub order: u32,
    pub parameter: QuaternaryFraction,
    /// Parameter after reversal; only set for improper curves.
    pub reverted: Option<QuaternaryFraction>,
}

/// Evaluates any curve at `q`, dispatching on the curve kind.
pub fn eval(curve: Curve, q: &QuaternaryFraction) -> Result<DyadicVec2> {
    if curve.is_proper() {
        eval_proper(curve, q)
    } else {
        eval_improper(curve, q)
    }
}

pub fn evaluate(curve: Curve, q: &QuaternaryFraction) -> Result<EvalResult> {
    let (point, reverted) = if curve.is_proper() {
        (eval_proper(curve, q)?, None)
    } else {
        let (p, r) = improper::eval_improper_with_parameter(curve, q)?;
        (p, Some(r))
    };
    Ok(EvalResult {
        point,
        curve,
        order: q.order(),
        parameter: q.clone(),
        reverted,
    })
}
