use proptest::prelude::*;

use hhc::geom::{invert_point, Cell};
use hhc::map::{eval, reversal_transform, transfer_point};
use hhc::{curve_table, Curve, DyadicScalar, DyadicVec2, QuaternaryFraction};

fn parameter(max_order: usize) -> impl Strategy<Value = QuaternaryFraction> {
    parameter_from(1, max_order)
}

fn parameter_from(min_order: usize, max_order: usize) -> impl Strategy<Value = QuaternaryFraction> {
    prop::collection::vec(0u8..4, min_order..=max_order).prop_map(|d| QuaternaryFraction::new(d).unwrap())
}

fn curve(range: std::ops::Range<u32>) -> impl Strategy<Value = Curve> {
    range.prop_map(|nu| Curve::from_nu(nu).unwrap())
}

fn unit_point() -> impl Strategy<Value = DyadicVec2> {
    (0i128..=1 << 20, 0i128..=1 << 20)
        .prop_map(|(x, y)| DyadicVec2::new(DyadicScalar::new(x, 20), DyadicScalar::new(y, 20)))
}

proptest! {
    #[test]
    fn unapply_inverts_apply(c in curve(0..12), digit in 0u8..4, p in unit_point()) {
        let map = *curve_table(c).map(digit);
        prop_assert_eq!(map.unapply(map.apply(p)).unwrap(), p);
    }

    #[test]
    fn reversal_is_an_involution(c in curve(6..12), t in parameter_from(2, 16)) {
        let once = reversal_transform(c, &t).unwrap();
        prop_assert_eq!(once.first(), t.first());
        prop_assert_eq!(reversal_transform(c, &once).unwrap(), t);
    }

    #[test]
    fn transfer_round_trips(to in curve(0..6), from in curve(0..6), t in parameter(20)) {
        let w = eval(from, &t).unwrap();
        let moved = transfer_point(to, from, t.first(), w).unwrap();
        prop_assert_eq!(moved, eval(to, &t).unwrap());
        prop_assert_eq!(transfer_point(from, to, t.first(), moved).unwrap(), w);
    }

    #[test]
    fn inversion_recovers_the_parameter(c in curve(0..12), t in parameter(14)) {
        prop_assume!(c.is_proper() || t.order() >= 2);
        let p = eval(c, &t).unwrap();
        let cell = Cell::containing(p, t.order()).unwrap();
        prop_assert_eq!(invert_point(c, &cell).unwrap(), t);
    }

    #[test]
    fn points_stay_in_the_first_quadrant_cell(c in curve(0..12), t in parameter(20)) {
        prop_assume!(c.is_proper() || t.order() >= 2);
        let p = eval(c, &t).unwrap();
        prop_assert!(p.in_unit_square());
        let quadrant = Cell::containing(p, 1).unwrap();
        prop_assert_eq!(quadrant.address(), vec![t.first()]);
    }

    #[test]
    fn index_form_round_trips(order in 1u32..=20, seed in any::<u64>()) {
        let index = seed % (1u64 << (2 * order));
        let q = QuaternaryFraction::from_index(index, order).unwrap();
        prop_assert_eq!(q.index(), index);
        let text = format!("{index}/4^{order}");
        prop_assert_eq!(text.parse::<QuaternaryFraction>().unwrap(), q.clone());
        prop_assert_eq!(q.to_string().parse::<QuaternaryFraction>().unwrap(), q);
    }
}
