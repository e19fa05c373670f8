//! Recursion identities relating `f^{(k+m)}(t / 4^m)` to `f^{(k)}(t)`.
//!
//! Prepending `m` zero digits to `t` divides it by `4^m`, which gives
//!
//! ```text
//! f_ν^{(k+m)}(t/4^m) = νp_0 ∘ (0p_0)^{m-1} ∘ f_0^{(k)}(t)
//! ```
//!
//! Because `0p_0 = [U_R, t_0]` has no translation, `(0p_0)^{m-1}` is a pure
//! scaling by `2^-(m-1)` combined with `U_R^{m-1}`, and the closed forms
//! below follow by splitting on the parity of `m`.

use serde::Serialize;

use crate::affine::Similarity;
use crate::curve::{curve_table, Curve};
use crate::dyadic::{DyadicScalar, DyadicVec2};
use crate::error::{HhcError, Result};
use crate::quaternary::QuaternaryFraction;
use crate::rotation::Rotation;

use super::proper::eval_proper;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// `m = 2r + 1`
    Odd,
    /// `m = 2r`
    Even,
}

impl Parity {
    pub fn shift(self, r: u32) -> u32 {
        match self {
            Parity::Odd => 2 * r + 1,
            Parity::Even => 2 * r,
        }
    }

    /// Splits `m` into `(r, parity)`.
    pub fn split(m: u32) -> (u32, Parity) {
        if m % 2 == 1 {
            (m / 2, Parity::Odd)
        } else {
            (m / 2, Parity::Even)
        }
    }
}

/// Which curve the `f^{(k+1)}(t/4)` term on the right-hand side refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormReading {
    /// `f_ν^{(k+1)}(t/4)`: the same curve as the left-hand side. This is
    /// what the composition actually produces.
    SameCurve,
    /// `f_0^{(k+1)}(t/4)`: the Hilbert curve, as the identity is commonly
    /// printed. Only coincides with `SameCurve` for a few curves.
    Hilbert,
}

fn require_shift(m: u32) -> Result<()> {
    if m == 0 {
        return Err(HhcError::OrderTooSmall {
            order: 0,
            min: 1,
            what: "recursion shift m",
        });
    }
    Ok(())
}

fn proper_only(curve: Curve) -> Result<()> {
    if curve.is_proper() {
        Ok(())
    } else {
        Err(HhcError::UnsupportedRecursion {
            curve,
            reason: "improper curves use recurse_improper",
        })
    }
}

/// `f_ν^{(k+m)}(t / 4^m)` via `νp_0 ∘ (0p_0)^{m-1}` applied to `f_0^{(k)}(t)`.
pub fn recurse_shift(curve: Curve, m: u32, q: &QuaternaryFraction) -> Result<DyadicVec2> {
    proper_only(curve)?;
    require_shift(m)?;
    let hilbert_zero = Similarity::from(curve_table(Curve::Hilbert).map(0));
    let outer = Similarity::from(curve_table(curve).map(0));
    let chain = outer.compose(&hilbert_zero.pow(m - 1));
    Ok(chain.apply(eval_proper(Curve::Hilbert, q)?))
}

/// Closed forms for `m = 2r + 1` and `m = 2r`:
///
/// ```text
/// odd:  4^-r · F + (4^r - 1) / 2^(2r+1) · νt_0
/// even: (-1)^ν / 2^(2r-1) · U_R F + ½ νt_0 - (-1)^ν / 4^r · U_R νt_0
/// ```
///
/// with `F = f^{(k+1)}(t/4)`, taken on the curve chosen by `reading`.
pub fn recurse_closed_form_with(
    curve: Curve,
    r: u32,
    parity: Parity,
    q: &QuaternaryFraction,
    reading: ClosedFormReading,
) -> Result<DyadicVec2> {
    proper_only(curve)?;
    if r == 0 {
        return Err(HhcError::OrderTooSmall {
            order: 0,
            min: 1,
            what: "closed-form recursion depth r",
        });
    }
    let inner_curve = match reading {
        ClosedFormReading::SameCurve => curve,
        ClosedFormReading::Hilbert => Curve::Hilbert,
    };
    // f^{(k+1)}(t/4) = p_0(f_0^{(k)}(t))
    let inner = curve_table(inner_curve)
        .map(0)
        .apply(eval_proper(Curve::Hilbert, q)?);
    let t0 = curve_table(curve).map(0).translation.as_vec();

    Ok(match parity {
        Parity::Odd => {
            let four_r = DyadicScalar::ONE.mul_pow2(2 * r);
            let coeff = (four_r - DyadicScalar::ONE).div_pow2(2 * r + 1);
            inner.div_pow2(2 * r) + t0.scale(coeff)
        }
        Parity::Even => {
            let sign = if curve.nu().is_multiple_of(2) { 1 } else { -1 };
            let rotated = Rotation::R.apply(inner).div_pow2(2 * r - 1);
            let correction = Rotation::R.apply(t0).div_pow2(2 * r);
            let signed = |v: DyadicVec2| if sign < 0 { -v } else { v };
            signed(rotated) + t0.halve() - signed(correction)
        }
    })
}

/// Closed-form recursion with the right-hand side on the same curve.
pub fn recurse_closed_form(
    curve: Curve,
    r: u32,
    parity: Parity,
    q: &QuaternaryFraction,
) -> Result<DyadicVec2> {
    recurse_closed_form_with(curve, r, parity, q, ClosedFormReading::SameCurve)
}

/// `f_ν^{(k+m)}(t / 4^m) = νp_0(f_5^{(k+m-1)}(t / 4^{m-1}))` for improper ν.
///
/// Only valid for curves whose first quadrant is not reversed (I1, I2, I5,
/// I6). For I3 and I4 the parameter would first have to be reverted, which
/// the identity does not account for, so they are refused.
pub fn recurse_improper(curve: Curve, m: u32, q: &QuaternaryFraction) -> Result<DyadicVec2> {
    curve.require_improper()?;
    if curve_table(curve).map(0).reversed {
        return Err(HhcError::UnsupportedRecursion {
            curve,
            reason: "quadrant 0 is reversed, the identity ignores the parameter reversion",
        });
    }
    require_shift(m)?;
    let order = q.order() + m;
    if order < 3 {
        return Err(HhcError::OrderTooSmall {
            order,
            min: 3,
            what: "improper recursion (order 2 follows the Liu 3 layout)",
        });
    }
    let inner = match m - 1 {
        0 => eval_proper(Curve::Liu4, q)?,
        1 => recurse_shift(Curve::Liu4, 1, q)?,
        shift => {
            let (r, parity) = Parity::split(shift);
            recurse_closed_form(Curve::Liu4, r, parity, q)?
        }
    };
    Ok(curve_table(curve).map(0).apply(inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::eval;

    fn q(s: &str) -> QuaternaryFraction {
        QuaternaryFraction::parse(s).unwrap()
    }

    #[test]
    fn shift_matches_prepended_digits() {
        let t = q("0");
        assert_eq!(recurse_shift(Curve::Hilbert, 1, &t).unwrap(), eval(Curve::Hilbert, &q("00")).unwrap());
        for curve in Curve::PROPER {
            for m in 1..=4 {
                for i in 0..16 {
                    let t = QuaternaryFraction::from_index(i, 2).unwrap();
                    let direct = eval(curve, &t.shifted(m).unwrap()).unwrap();
                    assert_eq!(recurse_shift(curve, m, &t).unwrap(), direct, "{curve} m={m} t={t}");
                }
            }
        }
    }

    #[test]
    fn single_shift_is_one_map() {
        let t = q("231");
        let expected = curve_table(Curve::Liu2).map(0).apply(eval(Curve::Hilbert, &t).unwrap());
        assert_eq!(recurse_shift(Curve::Liu2, 1, &t).unwrap(), expected);
    }

    #[test]
    fn closed_form_odd_and_even() {
        for i in 0..16 {
            let t = QuaternaryFraction::from_index(i, 2).unwrap();
            assert_eq!(
                recurse_closed_form(Curve::Liu2, 1, Parity::Odd, &t).unwrap(),
                recurse_shift(Curve::Liu2, 3, &t).unwrap()
            );
            assert_eq!(
                recurse_closed_form(Curve::Moore, 1, Parity::Even, &t).unwrap(),
                recurse_shift(Curve::Moore, 2, &t).unwrap()
            );
        }
    }

    #[test]
    fn readings_coincide_for_hilbert() {
        let t = q("3102");
        for parity in [Parity::Odd, Parity::Even] {
            assert_eq!(
                recurse_closed_form_with(Curve::Hilbert, 2, parity, &t, ClosedFormReading::Hilbert).unwrap(),
                recurse_closed_form(Curve::Hilbert, 2, parity, &t).unwrap()
            );
        }
    }

    #[test]
    fn hilbert_reading_fails_for_moore() {
        let t = q("12");
        let printed =
            recurse_closed_form_with(Curve::Moore, 1, Parity::Even, &t, ClosedFormReading::Hilbert).unwrap();
        assert_ne!(printed, recurse_shift(Curve::Moore, 2, &t).unwrap());
    }

    #[test]
    fn guarded_cases() {
        let t = q("12");
        assert!(matches!(recurse_shift(Curve::I1, 1, &t), Err(HhcError::UnsupportedRecursion { .. })));
        assert!(recurse_shift(Curve::Hilbert, 0, &t).is_err());
        assert!(recurse_closed_form(Curve::Hilbert, 0, Parity::Even, &t).is_err());
        for curve in [Curve::I3, Curve::I4] {
            assert!(matches!(
                recurse_improper(curve, 1, &t),
                Err(HhcError::UnsupportedRecursion { .. })
            ));
        }
        assert!(recurse_improper(Curve::Moore, 1, &t).is_err());
        assert!(recurse_improper(Curve::I1, 1, &q("1")).is_err());
    }

    #[test]
    fn improper_identity() {
        for curve in [Curve::I1, Curve::I2, Curve::I5, Curve::I6] {
            for m in 1..=3 {
                for i in 0..16 {
                    let t = QuaternaryFraction::from_index(i, 2).unwrap();
                    let direct = eval(curve, &t.shifted(m).unwrap()).unwrap();
                    assert_eq!(recurse_improper(curve, m, &t).unwrap(), direct, "{curve} m={m} t={t}");
                }
            }
        }
    }
}
