//! Structure of the rotation group: closure, inverses, element orders and
//! the subgroup inventory. The group is dihedral of order 8 (point group
//! 4mm), generated by `U_R` and `U_H`.

use serde::Serialize;

use crate::rotation::{matrix_mul, Rotation, ALL_ROTATIONS};
use crate::Check;

use Rotation::*;

/// Subgroups of order 4: two isomorphic to 2mm, one cyclic (point group 4).
pub const ORDER_FOUR_SUBGROUPS: [[Rotation; 4]; 3] =
    [[I, NegI, R, NegR], [I, NegI, H, NegH], [I, NegI, V, NegV]];

/// The five cyclic subgroups of order two.
pub const ORDER_TWO_SUBGROUPS: [[Rotation; 2]; 5] =
    [[I, R], [I, NegR], [I, NegI], [I, H], [I, NegH]];

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub checks: Vec<Check>,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// True when `set` contains the identity and is closed under products.
pub fn is_closed(set: &[Rotation]) -> bool {
    set.contains(&I)
        && set
            .iter()
            .all(|&a| set.iter().all(|&b| set.contains(&a.mul(b))))
}

fn is_cyclic(set: &[Rotation]) -> bool {
    set.iter().any(|g| g.order() as usize == set.len())
}

/// Subgroup generated by `generators`.
fn generated_by(generators: &[Rotation]) -> Vec<Rotation> {
    let mut set = vec![I];
    loop {
        let mut grew = false;
        for a in set.clone() {
            for &g in generators {
                let p = a.mul(g);
                if !set.contains(&p) {
                    set.push(p);
                    grew = true;
                }
            }
        }
        if !grew {
            set.sort();
            return set;
        }
    }
}

pub fn verify_group_structure() -> GroupReport {
    let mut checks = Vec::new();

    let mut matrix_agree = 0;
    let mut closed = 0;
    for a in ALL_ROTATIONS {
        for b in ALL_ROTATIONS {
            let p = a.mul(b);
            if ALL_ROTATIONS.contains(&p) {
                closed += 1;
            }
            if Rotation::from_matrix(matrix_mul(a.matrix(), b.matrix())) == Some(p) {
                matrix_agree += 1;
            }
        }
    }
    checks.push(Check::new(
        "closure",
        closed == 64,
        format!("{closed}/64 products land in the 8-element set"),
    ));
    checks.push(Check::new(
        "table-vs-matrix",
        matrix_agree == 64,
        format!("{matrix_agree}/64 table entries equal the integer matrix product"),
    ));

    let identities: Vec<_> = ALL_ROTATIONS
        .into_iter()
        .filter(|&e| ALL_ROTATIONS.iter().all(|&g| e.mul(g) == g && g.mul(e) == g))
        .collect();
    checks.push(Check::new(
        "unique-identity",
        identities == [I],
        format!("identities: {identities:?}"),
    ));

    let inverses_ok = ALL_ROTATIONS.iter().all(|&g| {
        ALL_ROTATIONS
            .iter()
            .filter(|&&h| g.mul(h) == I && h.mul(g) == I)
            .count()
            == 1
    });
    checks.push(Check::new(
        "inverses",
        inverses_ok,
        "every element has exactly one two-sided inverse".into(),
    ));

    let assoc = ALL_ROTATIONS.iter().all(|&a| {
        ALL_ROTATIONS.iter().all(|&b| {
            ALL_ROTATIONS
                .iter()
                .all(|&c| a.mul(b).mul(c) == a.mul(b.mul(c)))
        })
    });
    checks.push(Check::new("associativity", assoc, "512 triples".into()));

    let witness = ALL_ROTATIONS.iter().find_map(|&a| {
        ALL_ROTATIONS
            .iter()
            .find(|&&b| a.mul(b) != b.mul(a))
            .map(|&b| (a, b))
    });
    checks.push(Check::new(
        "non-abelian",
        witness.is_some(),
        match witness {
            Some((a, b)) => format!("{a}*{b} = {} but {b}*{a} = {}", a.mul(b), b.mul(a)),
            None => "all pairs commute".into(),
        },
    ));

    let mut profile = [0usize; 9];
    for g in ALL_ROTATIONS {
        profile[g.order() as usize] += 1;
    }
    checks.push(Check::new(
        "element-orders",
        profile[1] == 1 && profile[2] == 5 && profile[4] == 2 && profile.iter().sum::<usize>() == 8,
        format!(
            "order 1: {}, order 2: {}, order 4: {}",
            profile[1], profile[2], profile[4]
        ),
    ));

    let generated = generated_by(&[R, H]);
    checks.push(Check::new(
        "generators",
        generated.len() == 8,
        format!("<U_R, U_H> has {} elements", generated.len()),
    ));

    for (i, sub) in ORDER_FOUR_SUBGROUPS.iter().enumerate() {
        let cyclic = is_cyclic(sub);
        // the last one is the rotation group 4, the others are 2mm
        let expect_cyclic = i == 2;
        checks.push(Check::new(
            format!("subgroup-4-{}", i + 1),
            is_closed(sub) && cyclic == expect_cyclic,
            format!(
                "{} closed={} cyclic={}",
                fmt_set(sub),
                is_closed(sub),
                cyclic
            ),
        ));
    }
    for (i, sub) in ORDER_TWO_SUBGROUPS.iter().enumerate() {
        checks.push(Check::new(
            format!("subgroup-2-{}", i + 1),
            is_closed(sub) && is_cyclic(sub),
            format!("{} closed={}", fmt_set(sub), is_closed(sub)),
        ));
    }

    GroupReport { checks }
}

fn fmt_set(set: &[Rotation]) -> String {
    let labels: Vec<_> = set.iter().map(|r| r.label()).collect();
    format!("{{{}}}", labels.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes() {
        let report = verify_group_structure();
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert_eq!(report.checks.len(), 16);
    }

    #[test]
    fn rotation_subgroup_is_cyclic_of_order_four() {
        let sub = [I, NegI, V, NegV];
        assert!(is_closed(&sub));
        assert_eq!(V.order(), 4);
        assert!(is_cyclic(&sub));
        assert!(!is_cyclic(&[I, NegI, R, NegR]));
    }

    #[test]
    fn non_subgroups_are_detected() {
        assert!(is_closed(&[I, R]));
        assert!(!is_closed(&[I, V]));
        assert!(!is_closed(&[R, NegR]));
    }
}
