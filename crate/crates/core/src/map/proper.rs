//! Closed-form evaluation of the proper curves.
//!
//! An order-`k` proper curve sends `t = 0.q1...qk` to
//! `νp_{q1} ∘ 0p_{q2} ∘ ... ∘ 0p_{qk} (Ω)`. Expanding the composition gives
//!
//! ```text
//! f(t) = 2^-k · νU_{q1} 0U_{q2}..0U_{qk} Ω
//!      + Σ_{j=2..k} 2^-j · νU_{q1} 0U_{q2}..0U_{q(j-1)} · 0t_{qj}
//!      + ½ · νt_{q1}
//! ```
//!
//! where the rotation product in the j-th term stops at `q(j-1)`.

use crate::curve::{curve_table, Curve};
use crate::dyadic::{DyadicScalar, DyadicVec2};
use crate::error::{HhcError, Result};
use crate::quaternary::QuaternaryFraction;
use crate::rotation::Rotation;

fn check_range(q: &QuaternaryFraction, start: usize, end: usize) -> Result<&[u8]> {
    let len = q.digits().len();
    if start < 1 || start > end || end > len {
        return Err(HhcError::RangeOutOfBounds { start, end, len });
    }
    Ok(&q.digits()[start - 1..end])
}

/// Number of digits equal to 3 among `q_start ..= q_end` (1-based).
pub fn count3(q: &QuaternaryFraction, start: usize, end: usize) -> Result<usize> {
    Ok(check_range(q, start, end)?.iter().filter(|&&d| d == 3).count())
}

/// Number of digits equal to 0 or 3 among `q_start ..= q_end` (1-based).
pub fn count03(q: &QuaternaryFraction, start: usize, end: usize) -> Result<usize> {
    Ok(check_range(q, start, end)?
        .iter()
        .filter(|&&d| d == 0 || d == 3)
        .count())
}

/// `(1/6) Σ q(q-2)(q-1)`, which counts the 3s.
pub fn count3_polynomial(q: &QuaternaryFraction, start: usize, end: usize) -> Result<i64> {
    let sum: i64 = check_range(q, start, end)?
        .iter()
        .map(|&d| {
            let d = d as i64;
            d * (d - 2) * (d - 1)
        })
        .sum();
    Ok(sum / 6)
}

/// `end + ½ Σ q(q-3)`, the polynomial form of the 0-or-3 count.
///
/// The additive term is `end`, not the range length, so this only agrees
/// with [`count03`] when `start == 1`; in general it exceeds it by
/// `start - 1`.
pub fn count03_polynomial(q: &QuaternaryFraction, start: usize, end: usize) -> Result<i64> {
    let sum: i64 = check_range(q, start, end)?
        .iter()
        .map(|&d| {
            let d = d as i64;
            d * (d - 3)
        })
        .sum();
    Ok(end as i64 + sum / 2)
}

fn rotation_of(curve: Curve, digit: u8) -> Rotation {
    curve_table(curve).map(digit).rotation
}

fn translation_of(curve: Curve, digit: u8) -> DyadicVec2 {
    curve_table(curve).map(digit).translation.as_vec()
}

/// Expanded-sum evaluation of a proper curve.
pub fn eval_proper(curve: Curve, q: &QuaternaryFraction) -> Result<DyadicVec2> {
    curve.require_proper()?;
    let digits = q.digits();
    let k = digits.len() as u32;

    let mut product = rotation_of(curve, digits[0]);
    let mut sum = translation_of(curve, digits[0]).halve();
    for (j, &d) in digits.iter().enumerate().skip(1) {
        let term = product.apply(translation_of(Curve::Hilbert, d));
        sum = sum + term.div_pow2(j as u32 + 1);
        product = product.mul(rotation_of(Curve::Hilbert, d));
    }
    Ok(sum + product.apply(DyadicVec2::center()).div_pow2(k))
}

/// Direct nested composition `νp_{q1}(0p_{q2}(...0p_{qk}(Ω)))`.
pub fn eval_proper_nested(curve: Curve, q: &QuaternaryFraction) -> Result<DyadicVec2> {
    curve.require_proper()?;
    let digits = q.digits();
    let hilbert = curve_table(Curve::Hilbert);
    let inner = digits[1..]
        .iter()
        .rev()
        .fold(DyadicVec2::center(), |v, &d| hilbert.map(d).apply(v));
    Ok(curve_table(curve).map(digits[0]).apply(inner))
}

/// Evaluation with the Hilbert rotation products replaced by counts.
///
/// `0U_0 = U_R`, `0U_1 = 0U_2 = U_I` and `0U_3 = -U_R`, so the product of
/// `0U_{q2}..0U_{q(j-1)}` is `(-1)^#3 · U_R^#03` over that digit range, and
/// `U_R Ω = Ω` removes the rotation from the leading term.
pub fn eval_proper_fast(curve: Curve, q: &QuaternaryFraction) -> Result<DyadicVec2> {
    curve.require_proper()?;
    let digits = q.digits();
    let k = digits.len() as u32;
    let lead = rotation_of(curve, digits[0]);

    let mut threes = 0usize;
    let mut zeros_threes = 0usize;
    let mut sum = translation_of(curve, digits[0]).halve();
    for (j, &d) in digits.iter().enumerate().skip(1) {
        let (tx, ty) = curve_table(Curve::Hilbert).map(d).translation.components();
        let (mut x, mut y) = if zeros_threes % 2 == 1 { (ty, tx) } else { (tx, ty) };
        if threes % 2 == 1 {
            x = -x;
            y = -y;
        }
        let term = lead.apply(DyadicVec2::from_ints(x, y));
        sum = sum + term.div_pow2(j as u32 + 1);
        threes += (d == 3) as usize;
        zeros_threes += (d == 0 || d == 3) as usize;
    }
    let mut tip = lead.apply(DyadicVec2::center());
    if threes % 2 == 1 {
        tip = -tip;
    }
    Ok(sum + tip.div_pow2(k))
}

/// Squared half-diagonal of an order-`k` cell, `2^-(2k+1)`.
///
/// Every refinement of a `k`-digit parameter stays inside the same order-`k`
/// cell, so this bounds the squared distance from the order-`k` point to
/// any deeper approximation, and to the limit curve.
pub fn limit_error_bound_squared(order: u32) -> DyadicScalar {
    DyadicScalar::new(1, 2 * order + 1)
}
