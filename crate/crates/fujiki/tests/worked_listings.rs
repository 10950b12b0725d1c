mod common;

use std::sync::Arc;

use fujiki::catalog::{classify_entry_with, CatalogMethod};
use fujiki::fixedpoints::{fixed_surface_orbit_count, FujikiInput};
use fujiki::involutions::{
    are_equivalent, classify_involutions, enumerate_valid_involutions, extend_generator_inversion,
    overgroup_bridge_search, valid_involutions_from_irredundant_sets, EnumerationMethod,
    GroupInvolution,
};
use fujiki::permcore::{
    close_group, group_from_cycle_strings, parse_permutation, GroupTable, Perm,
};
use fujiki::singularities::singularity_profile;

fn perms(list: &[&str], n: usize) -> Vec<Perm> {
    list.iter()
        .map(|s| parse_permutation(s, n).unwrap())
        .collect()
}

fn c2p2c4() -> Arc<GroupTable> {
    common::catalog().entry("C2p2C4").unwrap().group().unwrap()
}

#[test]
fn c2p2c4_orbit_count_and_profile() {
    let g = c2p2c4();
    let theta =
        GroupInvolution::conjugation(g, &parse_permutation("(0,6)(2,4)", 8).unwrap()).unwrap();
    let input = FujikiInput::new(theta, 2).unwrap();
    assert_eq!(fixed_surface_orbit_count(&input), 5);
    assert_eq!(
        singularity_profile(&input).unwrap().without_a12(),
        [10, 0, 6, 0, 0, 0, 0]
    );
}

/// Both generator families of the listing extend to valid involutions, and
/// they are equivalent with Ḡ = G.
#[test]
fn c2p2c4_listing_families() {
    let g = c2p2c4();
    let f1 = perms(&["(0,1,2,7)(3,4,5,6)", "(0,4)(2,6)"], 8);
    let f2 = perms(&["(0,3,6,1)(2,5,4,7)", "(0,4)(2,6)"], 8);
    let t1 = extend_generator_inversion(&g, &f1).unwrap().unwrap();
    let t2 = extend_generator_inversion(&g, &f2).unwrap().unwrap();
    assert_ne!(t1, t2);
    assert!(are_equivalent(&t1, &t2, &g).unwrap().is_some());
    let all = enumerate_valid_involutions(&g, EnumerationMethod::Bases).unwrap();
    assert!(all.contains(&t1) && all.contains(&t2));
    assert_eq!(classify_involutions(&all, &[]).unwrap().classes.len(), 1);
}

/// The memoized search and the literal irredundant-set extension agree.
#[test]
fn bases_search_matches_literal_enumeration() {
    let catalog = common::catalog();
    for name in ["S3", "D4", "A4", "C2^2:C4", "C2xD4", "S4", "C3xS3"] {
        let g = catalog.entry(name).unwrap().group().unwrap();
        let fast = enumerate_valid_involutions(&g, EnumerationMethod::Bases).unwrap();
        let literal = valid_involutions_from_irredundant_sets(&g, 6);
        let maps = |v: &[GroupInvolution]| v.iter().map(|t| t.map().to_vec()).collect::<Vec<_>>();
        assert_eq!(maps(&fast), maps(&literal), "{name}");
    }
}

fn a33_families() -> (Arc<GroupTable>, GroupInvolution, GroupInvolution) {
    let g = common::catalog().entry("A33").unwrap().group().unwrap();
    let a = perms(
        &[
            "(0,1,8)(2,3,4)(5,6,7)",
            "(1,8)(2,7)(3,6)(4,5)",
            "(0,5)(1,7)(2,3)(6,8)",
        ],
        9,
    );
    let b = perms(
        &[
            "(0,1)(2,5)(3,7)(4,6)",
            "(0,1,8)(2,3,4)(5,6,7)",
            "(0,5)(1,7)(2,3)(6,8)",
        ],
        9,
    );
    let ta = extend_generator_inversion(&g, &a).unwrap().unwrap();
    let tb = extend_generator_inversion(&g, &b).unwrap().unwrap();
    (g, ta, tb)
}

#[test]
fn a33_listed_bridge_is_a_witness() {
    let (g, ta, tb) = a33_families();
    assert!(are_equivalent(&ta, &tb, &g).unwrap().is_none());
    let mut gens = g.generators().to_vec();
    gens.push(parse_permutation("(0,4,8,3,1,2)(5,6,7)", 9).unwrap());
    let h2 = close_group(&gens).unwrap();
    assert_eq!(h2.order(), 36);
    assert!(are_equivalent(&ta, &tb, &h2).unwrap().is_some());
}

#[test]
fn a33_bridge_search_finds_an_order_36_bridge() {
    let (g, ta, tb) = a33_families();
    let agl = common::catalog().overgroup("AGL2(F3)").unwrap();
    let h = overgroup_bridge_search(&agl, &ta, &tb, 36)
        .unwrap()
        .unwrap();
    let mut gens = g.generators().to_vec();
    gens.push(h);
    let bridge = close_group(&gens).unwrap();
    assert_eq!(bridge.order(), 36);
    assert!(are_equivalent(&ta, &tb, &bridge).unwrap().is_some());
    // A bridge of order |G| is G itself.
    assert!(overgroup_bridge_search(&agl, &ta, &tb, 18)
        .unwrap()
        .is_none());
}

#[test]
fn c2p2c4_conjugation_representative() {
    let g = c2p2c4();
    let theta =
        GroupInvolution::conjugation(g.clone(), &parse_permutation("(0,6)(2,4)", 8).unwrap())
            .unwrap();
    let all = enumerate_valid_involutions(&g, EnumerationMethod::Bases).unwrap();
    assert!(all.contains(&theta));
    let single = group_from_cycle_strings(&["(0,1,2,7)(3,4,5,6)", "(0,4)(2,6)"], 8).unwrap();
    assert_eq!(single.order(), 16);
}

#[test]
fn c4p2c3_needs_the_whole_monomial_group() {
    let catalog = common::catalog();
    let entry = catalog.entry("C4p2C3").unwrap();
    let alone = classify_entry_with(catalog, entry, CatalogMethod::Bases, false).unwrap();
    assert!(alone.class_count() > 1);
    let special = catalog.overgroup("F384").unwrap();
    let group = entry.classification_group().unwrap();
    assert!(group.is_subgroup_of(&special));
    let with_special = classify_involutions(
        &alone.candidates,
        &[fujiki::involutions::Bridge::Whole {
            name: "F384".into(),
            group: special,
        }],
    )
    .unwrap();
    let with_whole = classify_entry_with(catalog, entry, CatalogMethod::Bases, true).unwrap();
    assert!(with_special.classes.len() > 1);
    assert_eq!(with_whole.class_count(), 1);
}
