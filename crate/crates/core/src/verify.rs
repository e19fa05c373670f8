//! Verification suites: every identity of the library checked against an
//! independent route at desk-scale orders (exhaustive up to order 6,
//! seeded random samples up to order 12).

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{curve_table, Curve};
use crate::dyadic::{DyadicScalar, DyadicVec2};
use crate::error::{HhcError, Result};
use crate::geom::{
    check_adjacency, check_boundary_conditions, classify_properties, enumerate, expected_properties,
    invert_point,
};
use crate::group::verify_group_structure;
use crate::map::{
    count03, count03_polynomial, count3, count3_polynomial, eval, eval_proper, eval_proper_fast,
    eval_proper_nested, recurse_closed_form, recurse_closed_form_with, recurse_improper,
    recurse_shift, transfer_distance_check, transfer_point, ClosedFormReading, Parity,
};
use crate::quaternary::QuaternaryFraction;
use crate::Check;

/// Orders checked exhaustively.
pub const EXHAUSTIVE_ORDERS: std::ops::RangeInclusive<u32> = 1..=6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Group,
    Tables,
    Adjacency,
    Equivalence,
    Transfer,
    Recursion,
    Counts,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Group,
        Suite::Tables,
        Suite::Adjacency,
        Suite::Equivalence,
        Suite::Transfer,
        Suite::Recursion,
        Suite::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Group => "group",
            Suite::Tables => "tables",
            Suite::Adjacency => "adjacency",
            Suite::Equivalence => "equivalence",
            Suite::Transfer => "transfer",
            Suite::Recursion => "recursion",
            Suite::Counts => "counts",
        }
    }

    pub fn run(self) -> Vec<Check> {
        match self {
            Suite::Group => verify_group_structure().checks,
            Suite::Tables => tables(),
            Suite::Adjacency => adjacency(),
            Suite::Equivalence => equivalence(),
            Suite::Transfer => transfer(),
            Suite::Recursion => recursion(),
            Suite::Counts => counts(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = HhcError;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| HhcError::MalformedParameter(s.to_string()))
    }
}

fn min_order(curve: Curve) -> u32 {
    if curve.is_proper() {
        1
    } else {
        2
    }
}

fn all_parameters(order: u32) -> impl Iterator<Item = QuaternaryFraction> {
    (0..1u64 << (2 * order)).map(move |i| QuaternaryFraction::from_index(i, order).expect("in range"))
}

fn random_parameter(rng: &mut ChaCha8Rng, order: u32) -> QuaternaryFraction {
    let index = rng.gen_range(0..1u64 << (2 * order));
    QuaternaryFraction::from_index(index, order).expect("in range")
}

/// Arithmetic evaluation against the geometric enumeration, plus
/// inversion round-trips.
pub fn equivalence() -> Vec<Check> {
    let mut checks = Vec::new();
    for curve in Curve::ALL {
        let mut total = 0usize;
        let mut mismatches = Vec::new();
        for order in min_order(curve)..=*EXHAUSTIVE_ORDERS.end() {
            let seq = enumerate(curve, order).expect("valid order");
            for (i, t) in all_parameters(order).enumerate() {
                total += 1;
                let ok = eval(curve, &t).is_ok_and(|p| p == seq.cells[i].center());
                if !ok {
                    mismatches.push(format!("k={order} t={t}"));
                }
            }
        }
        checks.push(Check::new(
            format!("eval-vs-enumerate/{}", curve.name()),
            mismatches.is_empty(),
            format!(
                "{} of {total} points differ{}",
                mismatches.len(),
                mismatches.first().map(|m| format!(", first {m}")).unwrap_or_default()
            ),
        ));

        let order = 4;
        let seq = enumerate(curve, order).expect("valid order");
        let failures = seq
            .cells
            .iter()
            .filter(|c| {
                invert_point(curve, c)
                    .and_then(|t| eval(curve, &t))
                    .map_or(true, |p| p != c.center())
            })
            .count();
        checks.push(Check::new(
            format!("invert-roundtrip/{}", curve.name()),
            failures == 0,
            format!("{failures} of {} cells at k={order}", seq.len()),
        ));
    }
    checks
}

pub fn adjacency() -> Vec<Check> {
    let mut checks = Vec::new();
    for curve in Curve::ALL {
        let mut problems = Vec::new();
        for order in EXHAUSTIVE_ORDERS {
            let seq = enumerate(curve, order).expect("valid order");
            if let Err(v) = check_adjacency(&seq.cells) {
                problems.push(format!("k={order}: pair {} ({:?} -> {:?})", v.index, v.from, v.to));
            }
            if !seq.is_permutation() {
                problems.push(format!("k={order}: not a permutation of the grid"));
            }
        }
        checks.push(Check::new(
            format!("adjacency/{}", curve.name()),
            problems.is_empty(),
            if problems.is_empty() {
                "space-filling and edge-connected for k=1..6".into()
            } else {
                problems.join("; ")
            },
        ));
    }
    checks
}

/// Boundary conditions, geometric properties and order-1 layout.
pub fn tables() -> Vec<Check> {
    let mut checks = Vec::new();
    for curve in Curve::ALL {
        let mut failed = Vec::new();
        for order in 3..=7 {
            match check_boundary_conditions(curve, order) {
                Ok(c) if c.passed() => {}
                Ok(c) => failed.push(format!("k={order} entry {:?} exit {:?}", c.entry, c.exit)),
                Err(e) => failed.push(format!("k={order}: {e}")),
            }
        }
        checks.push(Check::new(
            format!("boundary/{}", curve.name()),
            failed.is_empty(),
            if failed.is_empty() {
                let (cond, _) = crate::geom::boundary_condition(curve);
                format!("entry {} exit {} for k=3..7", cond.entry, cond.exit)
            } else {
                failed.join("; ")
            },
        ));

        let expected = expected_properties(curve);
        let wrong: Vec<_> = (3..=6)
            .filter(|&k| classify_properties(curve, k).ok() != Some(expected))
            .collect();
        checks.push(Check::new(
            format!("properties/{}", curve.name()),
            wrong.is_empty(),
            format!("{expected:?}; mismatching orders {wrong:?}"),
        ));
    }

    let liu3 = enumerate(Curve::Liu3, 2).expect("valid order").cells;
    let differing: Vec<_> = Curve::IMPROPER
        .into_iter()
        .filter(|&c| enumerate(c, 2).map(|s| s.cells) != Ok(liu3.clone()))
        .collect();
    checks.push(Check::new(
        "improper-order-2-layout",
        differing.is_empty(),
        format!("curves differing from Liu3 at k=2: {differing:?}"),
    ));

    let quarter = |n| DyadicScalar::new(n, 2);
    let order_one = [
        DyadicVec2::new(quarter(1), quarter(1)),
        DyadicVec2::new(quarter(1), quarter(3)),
        DyadicVec2::new(quarter(3), quarter(3)),
        DyadicVec2::new(quarter(3), quarter(1)),
    ];
    let off: Vec<_> = Curve::ALL
        .into_iter()
        .filter(|&c| curve_table(c).maps.map(|m| m.apply(DyadicVec2::center())) != order_one)
        .collect();
    checks.push(Check::new(
        "order-1-quadrant-order",
        off.is_empty(),
        format!("curves not visiting LL, UL, UR, LR: {off:?}"),
    ));
    checks
}

pub fn transfer() -> Vec<Check> {
    const ORDER: u32 = 8;
    const SAMPLES: usize = 1000;
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7261_6e73);
    for to in Curve::PROPER {
        for from in Curve::PROPER {
            if to == from {
                continue;
            }
            let mut point_fail = 0;
            let mut distance_fail = 0;
            let mut roundtrip_fail = 0;
            for _ in 0..SAMPLES {
                let t = random_parameter(&mut rng, ORDER);
                let mut digits = random_parameter(&mut rng, ORDER).digits().to_vec();
                digits[0] = t.first();
                let t1 = QuaternaryFraction::new(digits).expect("valid digits");

                let w = eval(from, &t).expect("proper");
                let moved = transfer_point(to, from, t.first(), w);
                if moved.as_ref().ok() != eval(to, &t).ok().as_ref() {
                    point_fail += 1;
                }
                let back = moved.and_then(|p| transfer_point(from, to, t.first(), p));
                if back != Ok(w) {
                    roundtrip_fail += 1;
                }
                if transfer_distance_check(to, from, &t, &t1) != Ok(true) {
                    distance_fail += 1;
                }
            }
            checks.push(Check::new(
                format!("transfer/{}->{}", from.name(), to.name()),
                point_fail == 0 && distance_fail == 0 && roundtrip_fail == 0,
                format!(
                    "{SAMPLES} samples at k={ORDER}: {point_fail} point, {distance_fail} distance, {roundtrip_fail} round-trip failures"
                ),
            ));
        }
    }
    checks
}

pub fn recursion() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut printed_failure = None;
    for curve in Curve::PROPER {
        let mut shift_fail = 0;
        let mut closed_fail = 0;
        let mut total = 0;
        for m in 1..=5 {
            let (r, parity) = Parity::split(m);
            for order in 1..=5 {
                for t in all_parameters(order) {
                    total += 1;
                    let direct = eval(curve, &t.shifted(m).expect("fits")).expect("valid");
                    if recurse_shift(curve, m, &t).ok() != Some(direct) {
                        shift_fail += 1;
                    }
                    if r >= 1 {
                        if recurse_closed_form(curve, r, parity, &t).ok() != Some(direct) {
                            closed_fail += 1;
                        }
                        let printed = recurse_closed_form_with(curve, r, parity, &t, ClosedFormReading::Hilbert);
                        if printed_failure.is_none()
                            && curve != Curve::Hilbert
                            && parity == Parity::Even
                            && printed.ok() != Some(direct)
                        {
                            printed_failure = Some(format!("{} m={m} t={t}", curve.name()));
                        }
                    }
                }
            }
        }
        checks.push(Check::new(
            format!("recurse-shift/{}", curve.name()),
            shift_fail == 0,
            format!("{shift_fail} of {total} differ from the digit-prepended evaluation (m=1..5, k=1..5)"),
        ));
        checks.push(Check::new(
            format!("recurse-closed-form/{}", curve.name()),
            closed_fail == 0,
            format!("{closed_fail} mismatches with the inner term on the same curve (m=2..5, k=1..5)"),
        ));
    }
    checks.push(Check::new(
        "closed-form-hilbert-subscript-fails",
        printed_failure.is_some(),
        match &printed_failure {
            Some(case) => format!("inner term on the Hilbert curve is wrong, e.g. {case}"),
            None => "no even-m counterexample found".into(),
        },
    ));

    for curve in Curve::IMPROPER {
        let refuse = curve_table(curve).map(0).reversed;
        let mut fail = 0;
        let mut total = 0;
        for m in 1..=3 {
            for order in 1..=4 {
                if order + m < 3 {
                    continue;
                }
                for t in all_parameters(order) {
                    total += 1;
                    let got = recurse_improper(curve, m, &t);
                    let ok = if refuse {
                        matches!(got, Err(HhcError::UnsupportedRecursion { .. }))
                    } else {
                        got.ok() == eval(curve, &t.shifted(m).expect("fits")).ok()
                    };
                    if !ok {
                        fail += 1;
                    }
                }
            }
        }
        checks.push(Check::new(
            format!("recurse-improper/{}", curve.name()),
            fail == 0,
            if refuse {
                format!("refused as expected ({} of {total} cases not refused)", fail)
            } else {
                format!("{fail} of {total} mismatches (m=1..3)")
            },
        ));
    }
    checks
}

pub fn counts() -> Vec<Check> {
    let mut checks = Vec::new();
    for curve in Curve::PROPER {
        let mut fail = 0;
        let mut total = 0;
        for order in EXHAUSTIVE_ORDERS {
            for t in all_parameters(order) {
                total += 1;
                let a = eval_proper(curve, &t);
                if a != eval_proper_fast(curve, &t) || a != eval_proper_nested(curve, &t) {
                    fail += 1;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x6661_7374 + curve.nu() as u64);
        let mut random_fail = 0;
        for _ in 0..10_000 / Curve::PROPER.len() + 1 {
            let order = rng.gen_range(1..=12);
            let t = random_parameter(&mut rng, order);
            if eval_proper(curve, &t) != eval_proper_fast(curve, &t) {
                random_fail += 1;
            }
        }
        checks.push(Check::new(
            format!("fast-path/{}", curve.name()),
            fail == 0 && random_fail == 0,
            format!("{fail} of {total} exhaustive (k<=6) and {random_fail} random (k<=12) mismatches"),
        ));
    }

    let mut fail = 0;
    let mut total = 0;
    for order in EXHAUSTIVE_ORDERS {
        for t in all_parameters(order) {
            for end in 1..=order as usize {
                total += 1;
                let c3 = count3(&t, 1, end).expect("range") as i64;
                let c03 = count03(&t, 1, end).expect("range") as i64;
                if count3_polynomial(&t, 1, end) != Ok(c3) || count03_polynomial(&t, 1, end) != Ok(c03) {
                    fail += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "count-polynomials",
        fail == 0,
        format!("{fail} of {total} prefix ranges disagree with direct counts"),
    ));
    checks
}

/// Runs every suite.
pub fn run_all() -> Vec<(Suite, Vec<Check>)> {
    Suite::ALL.into_iter().map(|s| (s, s.run())).collect()
}
