//! Improper curves: four copies of the order-`k-1` Liu 4 curve, some of them
//! traversed backwards.
//!
//! Reversal is handled on the parameter before the maps are applied: in a
//! reversed quadrant `t` is replaced by `c - 4^-k - t`, where `c` is the
//! sum of the endpoints of that quadrant's interval. In digit terms the
//! first digit is kept and every later digit `d` becomes `3 - d`.

use crate::curve::{curve_table, Curve};
use crate::dyadic::{DyadicScalar, DyadicVec2};
use crate::error::{HhcError, Result};
use crate::quaternary::QuaternaryFraction;

use super::proper::eval_proper;

/// Reversal constants per quadrant, as multiples of 1/4. `None` keeps `t`.
const REVERSAL: [[Option<u8>; 4]; 6] = [
    [None, Some(3), None, Some(7)],
    [None, Some(3), None, None],
    [Some(1), Some(3), None, None],
    [Some(1), None, Some(5), None],
    [None, None, Some(5), Some(7)],
    [None, None, Some(5), None],
];

/// The tabulated constant `c` for `curve` in quadrant `digit`, in quarters.
pub fn reversal_constant(curve: Curve, digit: u8) -> Option<u8> {
    if curve.is_proper() {
        return None;
    }
    REVERSAL[(curve.nu() - 6) as usize][digit as usize]
}

/// Maps `t` to the parameter that is fed to the quadrant maps.
///
/// Involutive, and never changes the first digit.
pub fn reversal_transform(curve: Curve, q: &QuaternaryFraction) -> Result<QuaternaryFraction> {
    curve.require_improper()?;
    let k = q.order();
    if k < 2 {
        return Err(HhcError::OrderTooSmall {
            order: k,
            min: 2,
            what: "improper curves",
        });
    }
    let Some(quarters) = reversal_constant(curve, q.first()) else {
        return Ok(q.clone());
    };

    let mut digits = q.digits().to_vec();
    for d in &mut digits[1..] {
        *d = 3 - *d;
    }
    let reverted = QuaternaryFraction::new(digits)?;

    // cross-check against c - 4^-k - t
    let expected = DyadicScalar::new(quarters as i128, 2)
        - DyadicScalar::new(1, 2 * k)
        - q.value();
    if reverted.value() != expected || reverted.first() != q.first() {
        return Err(HhcError::NotRepresentable(k));
    }
    Ok(reverted)
}

/// Evaluates an improper curve of order `k >= 2`.
///
/// For `k >= 3` this is `νp_{q'1}(f_5^{(k-1)}(0.q'2...q'k))` with `q'` the
/// reverted parameter. At order 2 every improper curve has the Liu 3
/// layout, so the Liu 3 map is used directly.
pub fn eval_improper(curve: Curve, q: &QuaternaryFraction) -> Result<DyadicVec2> {
    Ok(eval_improper_with_parameter(curve, q)?.0)
}

pub(crate) fn eval_improper_with_parameter(
    curve: Curve,
    q: &QuaternaryFraction,
) -> Result<(DyadicVec2, QuaternaryFraction)> {
    let reverted = reversal_transform(curve, q)?;
    if q.order() == 2 {
        return Ok((eval_proper(Curve::Liu3, q)?, reverted));
    }
    let tail = reverted.tail().expect("order >= 3");
    let inner = eval_proper(Curve::Liu4, &tail)?;
    let point = curve_table(curve).map(reverted.first()).apply(inner);
    Ok((point, reverted))
}
