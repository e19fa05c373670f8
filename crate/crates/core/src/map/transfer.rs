//! Point transfer between proper curves.
//!
//! Two proper curves of the same order differ only in the first-level map,
//! so `f_ν(t) = νp_{q1} ∘ ν'p_{q1}^{-1} (f_ν'(t))`.

use crate::curve::{curve_table, Curve};
use crate::dyadic::DyadicVec2;
use crate::error::{HhcError, Result};
use crate::quaternary::QuaternaryFraction;

use super::eval;

/// Moves a point `w` of curve `from` (lying in quadrant `q1`) to the point
/// of curve `to` with the same parameter.
pub fn transfer_point(to: Curve, from: Curve, q1: u8, w: DyadicVec2) -> Result<DyadicVec2> {
    to.require_proper()?;
    from.require_proper()?;
    if q1 > 3 {
        return Err(HhcError::InvalidDigit(char::from(b'0' + q1.min(9))));
    }
    let inner = curve_table(from).map(q1).unapply(w)?;
    Ok(curve_table(to).map(q1).apply(inner))
}

/// Checks `|f_ν(t) - f_ν(t1)|² = |f_ν'(t) - f_ν'(t1)|²` exactly.
///
/// Both parameters must share their first digit.
pub fn transfer_distance_check(
    nu: Curve,
    nu_prime: Curve,
    t: &QuaternaryFraction,
    t1: &QuaternaryFraction,
) -> Result<bool> {
    nu.require_proper()?;
    nu_prime.require_proper()?;
    if t.first() != t1.first() {
        return Err(HhcError::QuadrantMismatch(t.first(), t1.first()));
    }
    let d = (eval(nu, t)? - eval(nu, t1)?).norm_squared();
    let d_prime = (eval(nu_prime, t)? - eval(nu_prime, t1)?).norm_squared();
    Ok(d == d_prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::DyadicScalar;

    fn q(s: &str) -> QuaternaryFraction {
        QuaternaryFraction::parse(s).unwrap()
    }

    #[test]
    fn identity_transfer() {
        let w = eval(Curve::Hilbert, &q("213")).unwrap();
        assert_eq!(transfer_point(Curve::Hilbert, Curve::Hilbert, 2, w).unwrap(), w);
    }

    #[test]
    fn hilbert_to_moore_in_first_quadrant() {
        // U_V U_R = -U_H, so (x, y) -> (1/2 - x, y)
        let x = DyadicScalar::new(3, 4);
        let y = DyadicScalar::new(5, 4);
        let w = DyadicVec2::new(x, y);
        let got = transfer_point(Curve::Moore, Curve::Hilbert, 0, w).unwrap();
        assert_eq!(got, DyadicVec2::new(DyadicScalar::HALF - x, y));
    }

    #[test]
    fn transfer_reproduces_direct_evaluation() {
        for i in 0..64 {
            let t = QuaternaryFraction::from_index(i, 3).unwrap();
            for from in Curve::PROPER {
                let w = eval(from, &t).unwrap();
                for to in Curve::PROPER {
                    let moved = transfer_point(to, from, t.first(), w).unwrap();
                    assert_eq!(moved, eval(to, &t).unwrap(), "{from} -> {to} at {t}");
                }
            }
        }
    }

    #[test]
    fn rejects_foreign_quadrant_and_improper_curves() {
        let w = eval(Curve::Hilbert, &q("01")).unwrap();
        assert!(matches!(
            transfer_point(Curve::Moore, Curve::Hilbert, 3, w),
            Err(HhcError::OutsideQuadrant(_))
        ));
        assert!(transfer_point(Curve::I1, Curve::Hilbert, 0, w).is_err());
        assert!(transfer_point(Curve::Hilbert, Curve::I2, 0, w).is_err());
    }

    #[test]
    fn distance_examples() {
        assert!(transfer_distance_check(Curve::Hilbert, Curve::Moore, &q("00"), &q("00")).unwrap());
        assert!(transfer_distance_check(Curve::Hilbert, Curve::Moore, &q("00"), &q("01")).unwrap());
        assert_eq!(
            transfer_distance_check(Curve::Hilbert, Curve::Moore, &q("00"), &q("10")),
            Err(HhcError::QuadrantMismatch(0, 1))
        );
    }
}
