use fujiki::invariants::{int, invariants_from_data, rat, s0_value, Verification};
use fujiki::singularities::SingularityProfile;
use num::BigInt;

fn k4_prime() -> SingularityProfile {
    SingularityProfile::parse_assignments("a2=45,a4=2").unwrap()
}

#[test]
fn step_by_step_values() {
    let inv = invariants_from_data(&k4_prime(), 6, 0, &int(9)).unwrap();
    assert_eq!(inv.chi, 69);
    assert_eq!(inv.b4, 55);
    assert_eq!(inv.c4, int(45));
    assert_eq!(s0_value(&k4_prime()).unwrap(), rat(27, 16));
    assert_eq!(inv.s0_value, rat(27, 16));
    assert_eq!(inv.c2_squared, int(330));
}

#[test]
fn verification_fails_with_squarefree_part_142() {
    let inv = invariants_from_data(&k4_prime(), 6, 0, &int(9)).unwrap();
    match &inv.verification {
        Verification::Irrational { squarefree, .. } => assert_eq!(squarefree, &BigInt::from(142)),
        other => panic!("expected an irrational verdict, got {other}"),
    }
    assert_eq!(inv.verification.to_string(), "IRRATIONAL(squarefree=142)");
}

/// Oracle: 9·(7·330 − 4·45)/15 = 1278 = 3²·142.
#[test]
fn radicand_by_hand() {
    assert_eq!(9 * (7 * 330 - 4 * 45) / 15, 1278);
    assert_eq!(1278, 9 * 142);
}
