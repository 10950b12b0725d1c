mod common;

use num::{BigInt, One, Zero};

use fujiki::catalog::{compute_table, ComputedRow};
use fujiki::invariants::{int, rational_root, verification_radicand, Rational};

fn rows() -> Vec<ComputedRow> {
    compute_table(common::catalog()).unwrap()
}

#[test]
fn every_row_matches_the_reference_table() {
    let catalog = common::catalog();
    let rows = rows();
    assert_eq!(rows.len(), 36);
    assert_eq!(catalog.golden.len(), 36);
    for (row, golden) in rows.iter().zip(&catalog.golden) {
        assert!(
            row.matches(golden),
            "{}/{}: {row:?}",
            golden.group,
            golden.class_label
        );
    }
}

#[test]
fn every_row_verifies() {
    for row in rows() {
        assert!(row.verified(), "{} {}", row.group, row.class_label);
    }
}

#[test]
fn radicand_is_a_perfect_square_on_every_row() {
    for row in rows() {
        let inv = &row.invariants;
        let radicand = verification_radicand(&int(3 * row.order as i64), &inv.c4, &inv.c2_squared);
        let root = rational_root(&radicand, 2)
            .unwrap()
            .expect("perfect square");
        assert_eq!(&root * &root, radicand);
        assert_eq!(Some(&root), inv.cbar_c2());
    }
}

#[test]
fn euler_characteristic_identity() {
    for row in rows() {
        let inv = &row.invariants;
        assert_eq!(inv.chi - inv.b4, 2 + 2 * inv.b2, "{}", row.group);
    }
}

#[test]
fn chern_number_denominators() {
    let divides = |r: &Rational, n: i64| (BigInt::from(n) % r.denom()).is_zero();
    for row in rows() {
        assert!(divides(&row.invariants.c4, 24), "{} c4", row.group);
        assert!(divides(&row.invariants.c2_squared, 6), "{} c2sq", row.group);
    }
}

#[test]
fn no_twelve_fold_points_on_the_catalog() {
    for row in rows() {
        assert_eq!(row.profile.a12, 0);
    }
}

/// Independent oracle for b₄ and χ: Noether-type relation solved by hand.
#[test]
fn betti_relation_by_hand() {
    for row in rows() {
        let p = &row.profile;
        let weighted = p.a2 + 2 * p.a3 + 3 * p.a4 + 5 * p.a6 + 7 * p.a8 + 4 * p.b4 + 5 * p.b6;
        let b4 = 46 + 10 * row.invariants.b2 - weighted as i64;
        assert_eq!(row.invariants.b4, b4);
        assert_eq!(row.invariants.chi, 2 + 2 * row.invariants.b2 + b4);
        assert!(row.invariants.s0_value > Rational::zero());
        assert!(row.invariants.c2_squared > Rational::one());
    }
}
