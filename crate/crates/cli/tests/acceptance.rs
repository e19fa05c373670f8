//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hhc::geom::{
    check_adjacency, check_boundary_conditions, classify_properties, enumerate, expected_properties,
};
use hhc::group::{is_closed, verify_group_structure, ORDER_FOUR_SUBGROUPS, ORDER_TWO_SUBGROUPS};
use hhc::map::eval;
use hhc::metrics::{dilation_estimate, dilation_survey, DilationMode, Ratio};
use hhc::rotation::{matrix_mul, ALL_ROTATIONS};
use hhc::verify::Suite;
use hhc::{rot_mul, Curve, QuaternaryFraction};

type Outcome = Result<String, String>;

struct Runner {
    failures: usize,
}

impl Runner {
    fn criterion(&mut self, id: u32, name: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = body();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {budget:?}")),
            Err(d) => (false, d),
        };
        if !passed {
            self.failures += 1;
        }
        println!(
            "[{}] {id:>2} {name} ({:.2}s): {detail}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
}

fn suite(s: Suite) -> Outcome {
    let checks = s.run();
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    if failed.is_empty() {
        Ok(format!("{} checks", checks.len()))
    } else {
        Err(format!("failed: {}", failed.join(", ")))
    }
}

fn min_order(curve: Curve) -> u32 {
    if curve.is_proper() {
        1
    } else {
        2
    }
}

fn group() -> Outcome {
    let mut mismatched = 0;
    for a in ALL_ROTATIONS {
        for b in ALL_ROTATIONS {
            if rot_mul(a, b).matrix() != matrix_mul(a.matrix(), b.matrix()) {
                mismatched += 1;
            }
        }
    }
    if mismatched > 0 {
        return Err(format!("{mismatched} of 64 products disagree with matrix products"));
    }
    let closed = ORDER_FOUR_SUBGROUPS.iter().all(|s| is_closed(s))
        && ORDER_TWO_SUBGROUPS.iter().all(|s| is_closed(s));
    if !closed {
        return Err("a listed subgroup is not closed".into());
    }
    let mut profile = [0; 9];
    for r in ALL_ROTATIONS {
        profile[r.order() as usize] += 1;
    }
    if (profile[1], profile[2], profile[4]) != (1, 5, 2) {
        return Err(format!("element orders {profile:?}"));
    }
    let abelian = ALL_ROTATIONS
        .iter()
        .all(|&a| ALL_ROTATIONS.iter().all(|&b| rot_mul(a, b) == rot_mul(b, a)));
    if abelian {
        return Err("group is abelian".into());
    }
    let report = verify_group_structure();
    if !report.passed() {
        return Err("structure report failed".into());
    }
    Ok("64 products, 3+5 subgroups closed, orders {1:1, 2:5, 4:2}, non-abelian".into())
}

fn equivalence() -> Outcome {
    let mut total = 0u64;
    for curve in Curve::ALL {
        for k in min_order(curve)..=6 {
            let seq = enumerate(curve, k).map_err(|e| e.to_string())?;
            for (i, cell) in seq.cells.iter().enumerate() {
                let t = QuaternaryFraction::from_index(i as u64, k).map_err(|e| e.to_string())?;
                let p = eval(curve, &t).map_err(|e| e.to_string())?;
                if p != cell.center() {
                    return Err(format!("{} k={k} t={t}: {p} vs {}", curve.name(), cell.center()));
                }
                total += 1;
            }
        }
    }
    Ok(format!("{total} exact equalities"))
}

fn boundaries() -> Outcome {
    for curve in Curve::ALL {
        for k in 3..=7 {
            let check = check_boundary_conditions(curve, k).map_err(|e| e.to_string())?;
            if !check.passed() {
                return Err(format!("{} k={k}", curve.name()));
            }
        }
    }
    let liu3 = enumerate(Curve::Liu3, 2).map_err(|e| e.to_string())?.cells;
    for curve in Curve::IMPROPER {
        if enumerate(curve, 2).map_err(|e| e.to_string())?.cells != liu3 {
            return Err(format!("{} order 2 differs from Liu3", curve.name()));
        }
    }
    Ok("12 curves x k=3..7; improper order 2 equals Liu3".into())
}

fn properties() -> Outcome {
    for curve in Curve::ALL {
        for k in 3..=6 {
            let got = classify_properties(curve, k).map_err(|e| e.to_string())?;
            if got != expected_properties(curve) {
                return Err(format!("{} k={k}: {got:?}", curve.name()));
            }
        }
    }
    Ok("12 rows x k=3..6".into())
}

fn adjacency() -> Outcome {
    let mut pairs = 0;
    for curve in Curve::ALL {
        for k in 1..=6 {
            let seq = enumerate(curve, k).map_err(|e| e.to_string())?;
            check_adjacency(&seq.cells).map_err(|v| format!("{} k={k}: {v:?}", curve.name()))?;
            pairs += seq.len() - 1;
        }
    }
    Ok(format!("{pairs} consecutive pairs, 0 violations"))
}

fn dilation() -> Outcome {
    let estimate = |k| dilation_estimate(Curve::Hilbert, k, DilationMode::Exhaustive).map_err(|e| e.to_string());
    let reports = (1..=6).map(estimate).collect::<Result<Vec<_>, _>>()?;
    if reports[0].estimate != 1.0 {
        return Err(format!("k=1 estimate {}", reports[0].estimate));
    }
    if reports.windows(2).any(|w| w[1].estimate < w[0].estimate) {
        return Err("not monotone in k".into());
    }
    let k6 = &reports[5];
    if !(5.0..=6.0).contains(&k6.estimate) {
        return Err(format!("k=6 estimate {} outside [5, 6]", k6.estimate));
    }
    if k6.ratio != (Ratio { num: 961, den: 171 }) {
        return Err(format!("k=6 ratio {} differs from regression value 961/171", k6.ratio));
    }
    let survey = dilation_survey(4, DilationMode::Exhaustive).map_err(|e| e.to_string())?;
    Ok(format!(
        "k=1..6: {}; survey k=4 min {:.6} max {:.6} spread {:.4}",
        reports.iter().map(|r| r.ratio.to_string()).collect::<Vec<_>>().join(", "),
        survey.min,
        survey.max,
        survey.spread
    ))
}

fn run(args: &[&str]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hhc"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn cli() -> Outcome {
    let (_, code) = run(&["verify", "--suite", "all"])?;
    if code != 0 {
        return Err(format!("verify --suite all exited {code}"));
    }
    let commands: [&[&str]; 4] = [
        &["svg", "--curve", "moore", "--order", "5"],
        &["curve", "--curve", "i3", "--order", "5", "--format", "csv"],
        &["curve", "--curve", "liu2", "--order", "4", "--format", "json"],
        &["dilation", "--curve", "hilbert", "--order", "4"],
    ];
    for args in commands {
        let (first, c1) = run(args)?;
        let (second, c2) = run(args)?;
        if c1 != 0 || c2 != 0 || first.is_empty() || first != second {
            return Err(format!("{} not byte-stable", args.join(" ")));
        }
    }
    Ok("verify exits 0; SVG, CSV and JSON byte-stable".into())
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let mut r = Runner { failures: 0 };
    r.criterion(1, "group structure", s(1), group);
    r.criterion(2, "evaluation equals enumeration", s(30), equivalence);
    r.criterion(3, "boundary conditions", s(10), boundaries);
    r.criterion(4, "geometric properties", s(10), properties);
    r.criterion(5, "adjacency", s(10), adjacency);
    r.criterion(6, "fast path and count polynomials", s(60), || suite(Suite::Counts));
    r.criterion(7, "point transfer", s(60), || suite(Suite::Transfer));
    r.criterion(8, "recursion identities", s(60), || suite(Suite::Recursion));
    r.criterion(9, "dilation", s(60), dilation);
    r.criterion(10, "command line", s(120), cli);
    if r.failures == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", r.failures);
        ExitCode::FAILURE
    }
}
