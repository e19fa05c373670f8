//! Squared dilation factor estimates.
//!
//! The squared dilation of a curve `f` is `sup |f(s) - f(t)|² / |s - t|`.
//! At order `k` the parameters are the interval midpoints
//! `t_i = (i + ½) / 4^k` and the points are the centres of the visited
//! cells, so every ratio is `(Δix² + Δiy²) / |i - j|` on the integer
//! lattice: exact, with the common `4^-k` factors cancelling. Only the
//! final reported estimate is converted to floating point.

use std::fmt;
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::curve::Curve;
use crate::error::{HhcError, Result};
use crate::geom::enumerate;

/// Largest order accepted for the exhaustive pair scan.
pub const MAX_EXHAUSTIVE_ORDER: u32 = 7;

/// Description of the ratio being maximised, included in every report.
pub const CONVENTION: &str = "squared: max |f(t_i)-f(t_j)|^2 / |t_i-t_j|, t_i=(i+1/2)/4^k";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DilationMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

impl fmt::Display for DilationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DilationMode::Exhaustive => f.write_str("exhaustive"),
            DilationMode::Sampled { samples, seed } => write!(f, "sampled:{samples}:seed={seed}"),
        }
    }
}

impl Serialize for DilationMode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A ratio `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn exceeds(self, other: Ratio) -> bool {
        self.num as u128 * other.den as u128 > other.num as u128 * self.den as u128
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DilationReport {
    pub curve: Curve,
    pub order: u32,
    pub convention: &'static str,
    #[serde(serialize_with = "serialize_significant")]
    pub estimate: f64,
    /// The maximum as an exact, reduced fraction.
    pub ratio: Ratio,
    /// Cell indices `(i, j)`, `i < j`, of the maximising pair; the smallest
    /// such pair in lexicographic order.
    pub argmax: (u64, u64),
    pub mode: DilationMode,
}

/// Formats with 12 significant digits.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{:.*}", digits.saturating_sub(1), x);
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn serialize_significant<S: Serializer>(x: &f64, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&format_significant(*x, 12))
}

#[derive(Debug, Clone, Copy)]
struct Best {
    ratio: Ratio,
    pair: (u64, u64),
}

impl Best {
    /// Keeps `self` on ties, so scanning pairs in increasing order yields
    /// the lexicographically smallest maximiser.
    fn merge(self, other: Best) -> Best {
        if other.ratio.exceeds(self.ratio)
            || (!self.ratio.exceeds(other.ratio) && other.pair < self.pair)
        {
            other
        } else {
            self
        }
    }
}

fn pair_ratio(points: &[(i64, i64)], i: usize, j: usize) -> Ratio {
    let dx = points[i].0 - points[j].0;
    let dy = points[i].1 - points[j].1;
    Ratio {
        num: (dx * dx + dy * dy) as u64,
        den: i.abs_diff(j) as u64,
    }
}

fn scan_rows(points: &[(i64, i64)], rows: std::ops::Range<usize>) -> Option<Best> {
    let mut best: Option<Best> = None;
    for i in rows {
        for j in i + 1..points.len() {
            let ratio = pair_ratio(points, i, j);
            if best.is_none_or(|b| ratio.exceeds(b.ratio)) {
                best = Some(Best {
                    ratio,
                    pair: (i as u64, j as u64),
                });
            }
        }
    }
    best
}

fn exhaustive(points: &[(i64, i64)], workers: usize) -> Option<Best> {
    const ROWS_PER_BLOCK: usize = 32;
    let blocks = points.len().div_ceil(ROWS_PER_BLOCK);
    let results: Mutex<Vec<Option<Best>>> = Mutex::new(vec![None; blocks]);
    let next = AtomicUsize::new(0);
    let workers = workers.clamp(1, blocks.max(1));

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let b = next.fetch_add(1, Ordering::Relaxed);
                if b >= blocks {
                    break;
                }
                let start = b * ROWS_PER_BLOCK;
                let end = (start + ROWS_PER_BLOCK).min(points.len());
                let best = scan_rows(points, start..end);
                results.lock().expect("no worker panicked")[b] = best;
            });
        }
    });

    results
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .flatten()
        .reduce(Best::merge)
}

fn sampled(points: &[(i64, i64)], samples: u64, seed: u64) -> Option<Best> {
    let n = points.len();
    if n < 2 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Best> = None;
    for _ in 0..samples {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let (i, j) = (a.min(b), a.max(b));
        let candidate = Best {
            ratio: pair_ratio(points, i, j),
            pair: (i as u64, j as u64),
        };
        best = Some(match best {
            None => candidate,
            Some(b) => b.merge(candidate),
        });
    }
    best
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

pub fn dilation_estimate(curve: Curve, order: u32, mode: DilationMode) -> Result<DilationReport> {
    dilation_estimate_with_workers(curve, order, mode, default_workers())
}

/// As [`dilation_estimate`], scanning with at most `workers` threads. The
/// result does not depend on the worker count.
pub fn dilation_estimate_with_workers(
    curve: Curve,
    order: u32,
    mode: DilationMode,
    workers: usize,
) -> Result<DilationReport> {
    if mode == DilationMode::Exhaustive && order > MAX_EXHAUSTIVE_ORDER {
        return Err(HhcError::OrderTooLarge {
            order,
            max: MAX_EXHAUSTIVE_ORDER,
            what: "exhaustive dilation",
        });
    }
    let points: Vec<(i64, i64)> = enumerate(curve, order)?
        .cells
        .iter()
        .map(|c| (c.ix as i64, c.iy as i64))
        .collect();
    let best = match mode {
        DilationMode::Exhaustive => exhaustive(&points, workers),
        DilationMode::Sampled { samples, seed } => sampled(&points, samples, seed),
    };
    let (ratio, argmax) = match best {
        Some(b) => {
            let g = gcd(b.ratio.num, b.ratio.den).max(1);
            (
                Ratio {
                    num: b.ratio.num / g,
                    den: b.ratio.den / g,
                },
                b.pair,
            )
        }
        None => (Ratio { num: 0, den: 1 }, (0, 0)),
    };
    Ok(DilationReport {
        curve,
        order,
        convention: CONVENTION,
        estimate: ratio.to_f64(),
        ratio,
        argmax,
        mode,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DilationSurvey {
    pub order: u32,
    pub reports: Vec<DilationReport>,
    #[serde(serialize_with = "serialize_significant")]
    pub min: f64,
    #[serde(serialize_with = "serialize_significant")]
    pub max: f64,
    /// `(max - min) / max`, the largest relative difference between two
    /// curves.
    #[serde(serialize_with = "serialize_significant")]
    pub spread: f64,
}

pub fn dilation_survey(order: u32, mode: DilationMode) -> Result<DilationSurvey> {
    dilation_survey_with_workers(order, mode, default_workers())
}

pub fn dilation_survey_with_workers(
    order: u32,
    mode: DilationMode,
    workers: usize,
) -> Result<DilationSurvey> {
    let reports = Curve::ALL
        .into_iter()
        .map(|c| dilation_estimate_with_workers(c, order, mode, workers))
        .collect::<Result<Vec<_>>>()?;
    let min = reports.iter().map(|r| r.estimate).fold(f64::INFINITY, f64::min);
    let max = reports.iter().map(|r| r.estimate).fold(0.0, f64::max);
    let spread = if max > 0.0 { (max - min) / max } else { 0.0 };
    Ok(DilationSurvey {
        order,
        reports,
        min,
        max,
        spread,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_hilbert() {
        let r = dilation_estimate(Curve::Hilbert, 1, DilationMode::Exhaustive).unwrap();
        assert_eq!(r.ratio, Ratio { num: 1, den: 1 });
        assert_eq!(r.estimate, 1.0);
        assert_eq!(r.argmax, (0, 1));
    }

    #[test]
    fn worker_count_does_not_matter() {
        let one = dilation_estimate_with_workers(Curve::I2, 4, DilationMode::Exhaustive, 1).unwrap();
        let many = dilation_estimate_with_workers(Curve::I2, 4, DilationMode::Exhaustive, 7).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn sampled_is_bounded_and_deterministic() {
        let mode = DilationMode::Sampled {
            samples: 2000,
            seed: 3,
        };
        let a = dilation_estimate(Curve::Moore, 4, mode).unwrap();
        let b = dilation_estimate(Curve::Moore, 4, mode).unwrap();
        assert_eq!(a, b);
        let full = dilation_estimate(Curve::Moore, 4, DilationMode::Exhaustive).unwrap();
        assert!(a.estimate <= full.estimate);
    }

    #[test]
    fn exhaustive_guard() {
        assert!(dilation_estimate(Curve::Hilbert, 8, DilationMode::Exhaustive).is_err());
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(1.0, 12), "1.00000000000");
        assert_eq!(format_significant(961.0 / 171.0, 12), "5.61988304094");
        assert_eq!(format_significant(0.0, 3), "0.00");
        assert_eq!(format_significant(12.5, 3), "12.5");
    }

    #[test]
    fn merge_prefers_smaller_pair_on_ties() {
        let r = Ratio { num: 2, den: 2 };
        let a = Best { ratio: r, pair: (0, 2) };
        let b = Best { ratio: Ratio { num: 1, den: 1 }, pair: (0, 1) };
        assert_eq!(a.merge(b).pair, (0, 1));
        assert_eq!(b.merge(a).pair, (0, 1));
    }
}
