//! The eight orthogonal rotation parts of the curve maps.
//!
//! Products are looked up in a transcribed multiplication table; the
//! integer matrices are kept alongside so the table can be cross-checked
//! by plain matrix multiplication.

use std::fmt;

use serde::Serialize;

use crate::dyadic::DyadicVec2;

/// One of `±U_I, ±U_R, ±U_V, ±U_H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rotation {
    I,
    R,
    NegI,
    NegR,
    V,
    H,
    NegV,
    NegH,
}

use Rotation::*;

/// Row/column order of the multiplication table.
pub const ALL_ROTATIONS: [Rotation; 8] = [I, R, NegI, NegR, V, H, NegV, NegH];

/// `PRODUCT[a][b]` is the label of `matrix(a) * matrix(b)`.
const PRODUCT: [[Rotation; 8]; 8] = [
    [I, R, NegI, NegR, V, H, NegV, NegH],
    [R, I, NegR, NegI, H, V, NegH, NegV],
    [NegI, NegR, I, R, NegV, NegH, V, H],
    [NegR, NegI, R, I, NegH, NegV, H, V],
    [V, NegH, NegV, H, NegI, R, I, NegR],
    [H, NegV, NegH, V, NegR, I, R, NegI],
    [NegV, H, V, NegH, I, NegR, NegI, R],
    [NegH, V, H, NegV, R, NegI, NegR, I],
];

pub type Matrix2 = [[i8; 2]; 2];

impl Rotation {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn matrix(self) -> Matrix2 {
        let base: Matrix2 = match self {
            I | NegI => [[1, 0], [0, 1]],
            R | NegR => [[0, 1], [1, 0]],
            V | NegV => [[0, -1], [1, 0]],
            H | NegH => [[1, 0], [0, -1]],
        };
        if self.is_negated() {
            base.map(|row| row.map(|e| -e))
        } else {
            base
        }
    }

    pub fn is_negated(self) -> bool {
        matches!(self, NegI | NegR | NegV | NegH)
    }

    pub fn determinant(self) -> i8 {
        let m = self.matrix();
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Looks a matrix up among the eight group elements.
    pub fn from_matrix(m: Matrix2) -> Option<Rotation> {
        ALL_ROTATIONS.into_iter().find(|r| r.matrix() == m)
    }

    pub fn mul(self, other: Rotation) -> Rotation {
        PRODUCT[self.index()][other.index()]
    }

    pub fn inverse(self) -> Rotation {
        // the table row holds exactly one identity entry
        ALL_ROTATIONS
            .into_iter()
            .find(|&b| self.mul(b) == I)
            .expect("every group element has an inverse")
    }

    pub fn pow(self, n: u32) -> Rotation {
        (0..n).fold(I, |acc, _| acc.mul(self))
    }

    /// Smallest `n >= 1` with `self^n = I`.
    pub fn order(self) -> u32 {
        (1..=8).find(|&n| self.pow(n) == I).unwrap_or(0)
    }

    pub fn apply(self, v: DyadicVec2) -> DyadicVec2 {
        let m = self.matrix();
        DyadicVec2::new(
            v.x.mul_int(m[0][0] as i64) + v.y.mul_int(m[0][1] as i64),
            v.x.mul_int(m[1][0] as i64) + v.y.mul_int(m[1][1] as i64),
        )
    }

    /// Applies the matrix to an integer vector.
    pub fn apply_int(self, x: i64, y: i64) -> (i64, i64) {
        let m = self.matrix();
        (
            m[0][0] as i64 * x + m[0][1] as i64 * y,
            m[1][0] as i64 * x + m[1][1] as i64 * y,
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            I => "U_I",
            R => "U_R",
            NegI => "-U_I",
            NegR => "-U_R",
            V => "U_V",
            H => "U_H",
            NegV => "-U_V",
            NegH => "-U_H",
        }
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn rot_mul(a: Rotation, b: Rotation) -> Rotation {
    a.mul(b)
}

pub fn rot_inv(a: Rotation) -> Rotation {
    a.inverse()
}

/// Integer matrix product, independent of the lookup table.
pub fn matrix_mul(a: Matrix2, b: Matrix2) -> Matrix2 {
    let mut out = [[0i8; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn footnote_matrices() {
        assert_eq!(I.matrix(), [[1, 0], [0, 1]]);
        assert_eq!(R.matrix(), [[0, 1], [1, 0]]);
        assert_eq!(V.matrix(), [[0, -1], [1, 0]]);
        assert_eq!(H.matrix(), [[1, 0], [0, -1]]);
        assert_eq!(NegR.matrix(), [[0, -1], [-1, 0]]);
    }

    #[test]
    fn orthogonal_with_unit_determinant() {
        for r in ALL_ROTATIONS {
            let m = r.matrix();
            let t = [[m[0][0], m[1][0]], [m[0][1], m[1][1]]];
            assert_eq!(matrix_mul(m, t), I.matrix(), "{r}");
            assert!(r.determinant().abs() == 1);
        }
    }

    #[test]
    fn table_examples() {
        assert_eq!(rot_mul(I, V), V);
        assert_eq!(rot_mul(V, R), NegH);
        assert_eq!(rot_mul(V, V), NegI);
    }

    #[test]
    fn inverses() {
        assert_eq!(rot_inv(I), I);
        assert_eq!(rot_inv(V), NegV);
        assert_eq!(rot_inv(R), R);
        for r in ALL_ROTATIONS {
            assert_eq!(r.mul(r.inverse()), I);
            assert_eq!(r.inverse().mul(r), I);
        }
    }

    #[test]
    fn table_matches_matrix_products() {
        for a in ALL_ROTATIONS {
            for b in ALL_ROTATIONS {
                let m = matrix_mul(a.matrix(), b.matrix());
                assert_eq!(Rotation::from_matrix(m), Some(a.mul(b)), "{a} * {b}");
            }
        }
    }
}
