//! Exact dyadic rationals: numbers of the form `n / 2^e`.
//!
//! Every coordinate produced by the curve maps is dyadic, so the whole
//! library works without rounding. Values are kept in canonical form
//! (odd numerator, or zero with exponent zero), which makes structural
//! equality coincide with numerical equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::HhcError;

/// Largest exponent accepted before a value is considered to have overflowed.
const MAX_EXPONENT: u32 = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyadicScalar {
    numerator: i128,
    exponent: u32,
}

fn shl_exact(n: i128, shift: u32) -> i128 {
    if n == 0 {
        return 0;
    }
    assert!(
        shift < 127 && n.unsigned_abs().leading_zeros() > shift + 1,
        "dyadic overflow: {n} << {shift}"
    );
    n << shift
}

impl DyadicScalar {
    pub const ZERO: DyadicScalar = DyadicScalar {
        numerator: 0,
        exponent: 0,
    };
    pub const ONE: DyadicScalar = DyadicScalar {
        numerator: 1,
        exponent: 0,
    };
    pub const HALF: DyadicScalar = DyadicScalar {
        numerator: 1,
        exponent: 1,
    };

    /// Builds `numerator / 2^exponent`, reducing to canonical form.
    pub fn new(numerator: i128, exponent: u32) -> Self {
        if numerator == 0 {
            return Self::ZERO;
        }
        let tz = numerator.trailing_zeros().min(exponent);
        let value = DyadicScalar {
            numerator: numerator >> tz,
            exponent: exponent - tz,
        };
        assert!(value.exponent <= MAX_EXPONENT, "dyadic exponent overflow");
        value
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(n as i128, 0)
    }

    pub fn numerator(self) -> i128 {
        self.numerator
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_zero(self) -> bool {
        self.numerator == 0
    }

    pub fn halve(self) -> Self {
        self.div_pow2(1)
    }

    /// Divides by `2^n`.
    pub fn div_pow2(self, n: u32) -> Self {
        if self.is_zero() {
            return self;
        }
        Self::new(self.numerator, self.exponent + n)
    }

    /// Multiplies by `2^n`.
    pub fn mul_pow2(self, n: u32) -> Self {
        if n <= self.exponent {
            Self::new(self.numerator, self.exponent - n)
        } else {
            Self::new(shl_exact(self.numerator, n - self.exponent), 0)
        }
    }

    pub fn mul_int(self, k: i64) -> Self {
        let n = self
            .numerator
            .checked_mul(k as i128)
            .expect("dyadic overflow in integer multiplication");
        Self::new(n, self.exponent)
    }

    pub fn abs(self) -> Self {
        DyadicScalar {
            numerator: self.numerator.abs(),
            exponent: self.exponent,
        }
    }

    /// Expresses the value with a fixed denominator `2^exponent`, if it
    /// does not need a finer one.
    pub fn numerator_at(self, exponent: u32) -> Option<i128> {
        if exponent < self.exponent {
            return None;
        }
        Some(shl_exact(self.numerator, exponent - self.exponent))
    }

    pub fn to_f64(self) -> f64 {
        self.numerator as f64 * 2f64.powi(-(self.exponent as i32))
    }

    /// Exact decimal expansion (always terminates for dyadic values).
    pub fn to_decimal_string(self) -> String {
        let negative = self.numerator < 0;
        let magnitude = self.numerator.unsigned_abs();
        let e = self.exponent;
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&(magnitude >> e).to_string());
        let mask = if e == 0 { 0 } else { (1u128 << e) - 1 };
        let mut rem = magnitude & mask;
        if rem != 0 {
            out.push('.');
            while rem != 0 {
                rem *= 10;
                out.push(char::from(b'0' + (rem >> e) as u8));
                rem &= mask;
            }
        }
        out
    }

    fn aligned(self, other: Self) -> (i128, i128, u32) {
        let e = self.exponent.max(other.exponent);
        (
            shl_exact(self.numerator, e - self.exponent),
            shl_exact(other.numerator, e - other.exponent),
            e,
        )
    }
}

impl Default for DyadicScalar {
    fn default() -> Self {
        Self::ZERO
    }
}

impl Add for DyadicScalar {
    type Output = DyadicScalar;

    fn add(self, rhs: Self) -> Self {
        let (a, b, e) = self.aligned(rhs);
        Self::new(a.checked_add(b).expect("dyadic overflow in addition"), e)
    }
}

impl Sub for DyadicScalar {
    type Output = DyadicScalar;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DyadicScalar {
    type Output = DyadicScalar;

    fn neg(self) -> Self {
        DyadicScalar {
            numerator: -self.numerator,
            exponent: self.exponent,
        }
    }
}

impl Mul for DyadicScalar {
    type Output = DyadicScalar;

    fn mul(self, rhs: Self) -> Self {
        let n = self
            .numerator
            .checked_mul(rhs.numerator)
            .expect("dyadic overflow in multiplication");
        Self::new(n, self.exponent + rhs.exponent)
    }
}

impl Ord for DyadicScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for DyadicScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// Formats as `n/2^e`, the exact interchange form used by the CLI.
impl fmt::Display for DyadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.numerator, self.exponent)
    }
}

impl FromStr for DyadicScalar {
    type Err = HhcError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HhcError::MalformedDyadic(s.to_string());
        let (num, exp) = s.trim().split_once("/2^").ok_or_else(bad)?;
        let numerator: i128 = num.parse().map_err(|_| bad())?;
        let exponent: u32 = exp.parse().map_err(|_| bad())?;
        if exponent > MAX_EXPONENT {
            return Err(bad());
        }
        Ok(Self::new(numerator, exponent))
    }
}

impl Serialize for DyadicScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An exact point of the plane with dyadic coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct DyadicVec2 {
    pub x: DyadicScalar,
    pub y: DyadicScalar,
}

impl DyadicVec2 {
    pub const fn new(x: DyadicScalar, y: DyadicScalar) -> Self {
        DyadicVec2 { x, y }
    }

    /// The centre of the unit square, used as the starting configuration.
    pub const fn center() -> Self {
        DyadicVec2::new(DyadicScalar::HALF, DyadicScalar::HALF)
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        DyadicVec2::new(x.into(), y.into())
    }

    pub fn halve(self) -> Self {
        DyadicVec2::new(self.x.halve(), self.y.halve())
    }

    pub fn div_pow2(self, n: u32) -> Self {
        DyadicVec2::new(self.x.div_pow2(n), self.y.div_pow2(n))
    }

    pub fn mul_pow2(self, n: u32) -> Self {
        DyadicVec2::new(self.x.mul_pow2(n), self.y.mul_pow2(n))
    }

    pub fn scale(self, s: DyadicScalar) -> Self {
        DyadicVec2::new(self.x * s, self.y * s)
    }

    pub fn dot(self, other: Self) -> DyadicScalar {
        self.x * other.x + self.y * other.y
    }

    pub fn norm_squared(self) -> DyadicScalar {
        self.dot(self)
    }

    /// True when both coordinates lie in the closed unit interval.
    pub fn in_unit_square(self) -> bool {
        let unit = DyadicScalar::ZERO..=DyadicScalar::ONE;
        unit.contains(&self.x) && unit.contains(&self.y)
    }

    pub fn to_f64(self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl Add for DyadicVec2 {
    type Output = DyadicVec2;

    fn add(self, rhs: Self) -> Self {
        DyadicVec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for DyadicVec2 {
    type Output = DyadicVec2;

    fn sub(self, rhs: Self) -> Self {
        DyadicVec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for DyadicVec2 {
    type Output = DyadicVec2;

    fn neg(self) -> Self {
        DyadicVec2::new(-self.x, -self.y)
    }
}

impl fmt::Display for DyadicVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
