//! The twelve homogeneous Hilbert curves and their defining maps.
//!
//! Curves 0..=5 are *proper*: an order-`k` curve is four affine copies of
//! the order-`k-1` Hilbert curve. Curves 6..=11 are *improper*: the copies
//! are of the order-`k-1` Liu 4 curve, and some copies are traversed
//! backwards.
//!
//! Naming follows the boundary-condition table (`Liu1..Liu4` for indices
//! 2..=5). Some prose elsewhere refers to curve 4 as "Liu 5"; that name is
//! not used here.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::affine::{AffineMap, TranslationVec};
use crate::error::{HhcError, Result};
use crate::rotation::Rotation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curve {
    Hilbert,
    Moore,
    Liu1,
    Liu2,
    Liu3,
    Liu4,
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Proper,
    Improper,
}

impl CurveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CurveKind::Proper => "proper",
            CurveKind::Improper => "improper",
        }
    }
}

impl Curve {
    pub const ALL: [Curve; 12] = [
        Curve::Hilbert,
        Curve::Moore,
        Curve::Liu1,
        Curve::Liu2,
        Curve::Liu3,
        Curve::Liu4,
        Curve::I1,
        Curve::I2,
        Curve::I3,
        Curve::I4,
        Curve::I5,
        Curve::I6,
    ];

    pub const PROPER: [Curve; 6] = [
        Curve::Hilbert,
        Curve::Moore,
        Curve::Liu1,
        Curve::Liu2,
        Curve::Liu3,
        Curve::Liu4,
    ];

    pub const IMPROPER: [Curve; 6] = [
        Curve::I1,
        Curve::I2,
        Curve::I3,
        Curve::I4,
        Curve::I5,
        Curve::I6,
    ];

    pub fn from_nu(nu: u32) -> Result<Curve> {
        Curve::ALL
            .get(nu as usize)
            .copied()
            .ok_or(HhcError::UnknownCurve(nu))
    }

    /// The curve index ν.
    pub fn nu(self) -> u32 {
        self as u32
    }

    pub fn name(self) -> &'static str {
        match self {
            Curve::Hilbert => "Hilbert",
            Curve::Moore => "Moore",
            Curve::Liu1 => "Liu1",
            Curve::Liu2 => "Liu2",
            Curve::Liu3 => "Liu3",
            Curve::Liu4 => "Liu4",
            Curve::I1 => "I1",
            Curve::I2 => "I2",
            Curve::I3 => "I3",
            Curve::I4 => "I4",
            Curve::I5 => "I5",
            Curve::I6 => "I6",
        }
    }

    pub fn kind(self) -> CurveKind {
        if self.nu() <= 5 {
            CurveKind::Proper
        } else {
            CurveKind::Improper
        }
    }

    pub fn is_proper(self) -> bool {
        self.kind() == CurveKind::Proper
    }

    /// Curve whose order-`k-1` instance is copied into each quadrant.
    pub fn base(self) -> Curve {
        match self.kind() {
            CurveKind::Proper => Curve::Hilbert,
            CurveKind::Improper => Curve::Liu4,
        }
    }

    pub(crate) fn require_proper(self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(HhcError::WrongKind {
                curve: self,
                expected: "proper",
                actual: "improper",
            })
        }
    }

    pub(crate) fn require_improper(self) -> Result<()> {
        if self.is_proper() {
            Err(HhcError::WrongKind {
                curve: self,
                expected: "improper",
                actual: "proper",
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (nu={})", self.name(), self.nu())
    }
}

/// Accepts the index `0..=11` or a case-insensitive name.
impl FromStr for Curve {
    type Err = HhcError;

    fn from_str(s: &str) -> Result<Curve> {
        let s = s.trim();
        if let Ok(nu) = s.parse::<u32>() {
            return Curve::from_nu(nu);
        }
        Curve::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| HhcError::UnknownCurveName(s.to_string()))
    }
}

impl Serialize for Curve {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Maps for the four quadrant digits of one curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveTable {
    pub id: Curve,
    pub maps: [AffineMap; 4],
    pub base: Curve,
}

impl CurveTable {
    pub fn map(&self, digit: u8) -> &AffineMap {
        &self.maps[digit as usize]
    }
}

macro_rules! map {
    ($r:ident, $t:ident) => {
        AffineMap::new(Rotation::$r, TranslationVec::$t)
    };
    (rev $r:ident, $t:ident) => {
        AffineMap::reversed(Rotation::$r, TranslationVec::$t)
    };
}

const MAPS: [[AffineMap; 4]; 12] = [
    [map!(R, T0), map!(I, T1), map!(I, T3), map!(NegR, T4)],
    [map!(V, T2), map!(V, T3), map!(NegV, T5), map!(NegV, T3)],
    [map!(NegI, T3), map!(I, T1), map!(I, T3), map!(NegI, T4)],
    [map!(H, T1), map!(V, T3), map!(NegV, T5), map!(H, T3)],
    [map!(R, T0), map!(I, T1), map!(I, T3), map!(NegI, T4)],
    [map!(H, T1), map!(V, T3), map!(NegV, T5), map!(NegV, T3)],
    [map!(NegI, T3), map!(rev NegH, T3), map!(I, T3), map!(rev H, T3)],
    [map!(NegI, T3), map!(rev NegH, T3), map!(I, T3), map!(NegR, T4)],
    [map!(rev NegV, T1), map!(rev NegH, T3), map!(I, T3), map!(NegR, T4)],
    [map!(rev NegR, T3), map!(V, T3), map!(rev R, T3), map!(NegV, T3)],
    [map!(H, T1), map!(V, T3), map!(rev R, T3), map!(rev NegI, T4)],
    [map!(H, T1), map!(V, T3), map!(rev R, T3), map!(NegV, T3)],
];

pub fn curve_table(curve: Curve) -> CurveTable {
    CurveTable {
        id: curve,
        maps: MAPS[curve.nu() as usize],
        base: curve.base(),
    }
}
