use std::fmt;

use serde::Serialize;

use crate::dyadic::{DyadicScalar, DyadicVec2};
use crate::error::{HhcError, Result};
use crate::rotation::Rotation;

/// The six integer translation vectors `t_0 .. t_5`, stored un-halved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TranslationVec {
    T0,
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl TranslationVec {
    pub const ALL: [TranslationVec; 6] = [
        TranslationVec::T0,
        TranslationVec::T1,
        TranslationVec::T2,
        TranslationVec::T3,
        TranslationVec::T4,
        TranslationVec::T5,
    ];

    pub fn components(self) -> (i64, i64) {
        match self {
            TranslationVec::T0 => (0, 0),
            TranslationVec::T1 => (0, 1),
            TranslationVec::T2 => (1, 0),
            TranslationVec::T3 => (1, 1),
            TranslationVec::T4 => (2, 1),
            TranslationVec::T5 => (1, 2),
        }
    }

    pub fn as_vec(self) -> DyadicVec2 {
        let (x, y) = self.components();
        DyadicVec2::from_ints(x, y)
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for TranslationVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.index())
    }
}

/// The operator `[U, t]_{1/2}`: `v -> U v / 2 + t / 2`.
///
/// `reversed` marks a map whose sub-curve is traversed backwards. It has no
/// effect on single points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AffineMap {
    pub rotation: Rotation,
    pub translation: TranslationVec,
    pub reversed: bool,
}

impl AffineMap {
    pub const fn new(rotation: Rotation, translation: TranslationVec) -> Self {
        AffineMap {
            rotation,
            translation,
            reversed: false,
        }
    }

    pub const fn reversed(rotation: Rotation, translation: TranslationVec) -> Self {
        AffineMap {
            rotation,
            translation,
            reversed: true,
        }
    }

    pub fn apply(&self, v: DyadicVec2) -> DyadicVec2 {
        (self.rotation.apply(v) + self.translation.as_vec()).halve()
    }

    /// Inverse of [`AffineMap::apply`]; fails when `w` is not in the image
    /// of the unit square.
    pub fn unapply(&self, w: DyadicVec2) -> Result<DyadicVec2> {
        let v = self
            .rotation
            .inverse()
            .apply(w.mul_pow2(1) - self.translation.as_vec());
        if v.in_unit_square() {
            Ok(v)
        } else {
            Err(HhcError::OutsideQuadrant(w.to_string()))
        }
    }

    /// Lower-left corner of the image of the unit square, in halves.
    ///
    /// Returns `(qx, qy)` with `qx, qy` in `{0, 1}`.
    pub fn image_quadrant(&self) -> (i64, i64) {
        let corners = [(0, 0), (0, 1), (1, 0), (1, 1)];
        let (tx, ty) = self.translation.components();
        corners
            .iter()
            .map(|&(x, y)| {
                let (rx, ry) = self.rotation.apply_int(x, y);
                (rx + tx, ry + ty)
            })
            .min()
            .expect("four corners")
    }

    /// Applies the map to a lattice point given in units of `2^-(e)`;
    /// the result is in units of `2^-(e+1)`.
    pub fn apply_lattice(&self, x: i64, y: i64, exponent: u32) -> (i64, i64) {
        let (rx, ry) = self.rotation.apply_int(x, y);
        let (tx, ty) = self.translation.components();
        (rx + (tx << exponent), ry + (ty << exponent))
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reversed {
            write!(f, "rev[{}, {}]", self.rotation, self.translation)
        } else {
            write!(f, "[{}, {}]", self.rotation, self.translation)
        }
    }
}

pub fn affine_apply(p: &AffineMap, v: DyadicVec2) -> DyadicVec2 {
    p.apply(v)
}

pub fn affine_unapply(p: &AffineMap, w: DyadicVec2) -> Result<DyadicVec2> {
    p.unapply(w)
}

/// A general similarity `v -> scale * U v + offset`, used to express
/// compositions and powers of curve maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Similarity {
    pub scale: DyadicScalar,
    pub rotation: Rotation,
    pub offset: DyadicVec2,
}

impl Similarity {
    pub fn identity() -> Self {
        Similarity {
            scale: DyadicScalar::ONE,
            rotation: Rotation::I,
            offset: DyadicVec2::default(),
        }
    }

    pub fn apply(&self, v: DyadicVec2) -> DyadicVec2 {
        self.rotation.apply(v).scale(self.scale) + self.offset
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Similarity) -> Similarity {
        Similarity {
            scale: self.scale * other.scale,
            rotation: self.rotation.mul(other.rotation),
            offset: self.apply(other.offset),
        }
    }

    pub fn pow(&self, n: u32) -> Similarity {
        (0..n).fold(Similarity::identity(), |acc, _| acc.compose(self))
    }
}

impl From<&AffineMap> for Similarity {
    fn from(p: &AffineMap) -> Self {
        Similarity {
            scale: DyadicScalar::HALF,
            rotation: p.rotation,
            offset: p.translation.as_vec().halve(),
        }
    }
}
