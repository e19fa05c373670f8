use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::dyadic::DyadicScalar;
use crate::error::{HhcError, Result};

/// Largest order whose indices fit in a `u64`.
pub const MAX_ORDER: u32 = 31;

/// A parameter `t = 0.q1 q2 ... qk` in base 4, kept as its digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuaternaryFraction {
    digits: Vec<u8>,
}

impl QuaternaryFraction {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(HhcError::EmptyDigits);
        }
        if let Some(&d) = digits.iter().find(|&&d| d > 3) {
            return Err(HhcError::InvalidDigit(char::from(b'0' + d.min(9))));
        }
        if digits.len() > MAX_ORDER as usize {
            return Err(HhcError::OrderTooLarge {
                order: digits.len() as u32,
                max: MAX_ORDER,
                what: "quaternary parameters",
            });
        }
        Ok(QuaternaryFraction { digits })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let digits = text
            .trim()
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(HhcError::InvalidDigit(c)),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(digits)
    }

    /// The digits of `index / 4^order`.
    pub fn from_index(index: u64, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(HhcError::EmptyDigits);
        }
        if order > MAX_ORDER {
            return Err(HhcError::OrderTooLarge {
                order,
                max: MAX_ORDER,
                what: "quaternary parameters",
            });
        }
        if index >> (2 * order) != 0 {
            return Err(HhcError::IndexOutOfRange { index, order });
        }
        let digits = (0..order)
            .rev()
            .map(|s| ((index >> (2 * s)) & 3) as u8)
            .collect();
        Ok(QuaternaryFraction { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn order(&self) -> u32 {
        self.digits.len() as u32
    }

    /// First digit, i.e. `floor(4t)`.
    pub fn first(&self) -> u8 {
        self.digits[0]
    }

    /// Position of `t` among the `4^k` subintervals.
    pub fn index(&self) -> u64 {
        self.digits.iter().fold(0u64, |acc, &d| (acc << 2) | d as u64)
    }

    /// Exact value `sum q_s / 4^s`.
    pub fn value(&self) -> DyadicScalar {
        DyadicScalar::new(self.index() as i128, 2 * self.order())
    }

    /// `0.00...0 q1 ... qk` with `m` leading zeros, i.e. `t / 4^m`.
    pub fn shifted(&self, m: u32) -> Result<Self> {
        let mut digits = vec![0u8; m as usize];
        digits.extend_from_slice(&self.digits);
        Self::new(digits)
    }

    /// Digits `q2 ... qk`, i.e. `4t - q1`.
    pub fn tail(&self) -> Option<Self> {
        (self.digits.len() > 1).then(|| QuaternaryFraction {
            digits: self.digits[1..].to_vec(),
        })
    }
}

/// Parses a bare digit string or the index form `i/4^k`.
impl FromStr for QuaternaryFraction {
    type Err = HhcError;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once("/4^") {
            Some((i, k)) => {
                let bad = || HhcError::MalformedParameter(s.to_string());
                let index: u64 = i.trim().parse().map_err(|_| bad())?;
                let order: u32 = k.trim().parse().map_err(|_| bad())?;
                Self::from_index(index, order)
            }
            None => Self::parse(s),
        }
    }
}

impl fmt::Display for QuaternaryFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl Serialize for QuaternaryFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn quaternary_parse(text: &str) -> Result<QuaternaryFraction> {
    QuaternaryFraction::parse(text)
}

pub fn quaternary_value(q: &QuaternaryFraction) -> DyadicScalar {
    q.value()
}

pub fn quaternary_from_index(index: u64, order: u32) -> Result<QuaternaryFraction> {
    QuaternaryFraction::from_index(index, order)
}
