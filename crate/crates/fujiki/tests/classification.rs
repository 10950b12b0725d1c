mod common;

use fujiki::catalog::{classify_entry, classify_entry_with, CatalogMethod};
use fujiki::fixedpoints::{fixed_surface_orbit_count, FujikiInput};
use fujiki::involutions::is_valid_involution;
use fujiki::singularities::singularity_profile;

fn expected(name: &str) -> usize {
    common::catalog()
        .entry(name)
        .unwrap()
        .classification
        .expected_classes
}

#[test]
fn catalog_lists_two_classes_exactly_for_three_groups() {
    let two: Vec<&str> = common::catalog()
        .groups
        .iter()
        .filter(|e| e.classification.expected_classes == 2)
        .map(|e| e.name.as_str())
        .collect();
    assert_eq!(two, ["A3,3", "C2^2wrC2", "C2^4:S3"]);
}

/// Every non-abelian group except C₂×𝒟₄ (see the dedicated test) gets the
/// catalog class count from the bases method with the shipped bridges.
#[test]
fn bases_method_class_counts() {
    let catalog = common::catalog();
    for entry in catalog
        .groups
        .iter()
        .filter(|e| !e.abelian && e.name != "C2xD4")
    {
        let c = classify_entry(catalog, entry, CatalogMethod::Bases).unwrap();
        assert_eq!(c.class_count(), expected(&entry.name), "{}", entry.name);
        for class in &c.classification.classes {
            assert!(is_valid_involution(&class.representative));
        }
    }
}

#[test]
fn ambient_scan_class_counts() {
    let catalog = common::catalog();
    for entry in catalog
        .groups
        .iter()
        .filter(|e| !e.abelian && e.classification.ambient_scan)
    {
        let c = classify_entry(catalog, entry, CatalogMethod::Ambient).unwrap();
        assert_eq!(c.class_count(), expected(&entry.name), "{}", entry.name);
    }
}

#[test]
fn abelian_groups_have_inversion_only() {
    let catalog = common::catalog();
    for entry in catalog.groups.iter().filter(|e| e.abelian) {
        let c = classify_entry(catalog, entry, CatalogMethod::Bases).unwrap();
        assert_eq!(c.candidates.len(), 1, "{}", entry.name);
    }
}

/// Extending generating families finds a second class on C₂×𝒟₄ that
/// conjugation inside 𝔖₆ cannot reach; its singularities differ from the
/// identity class, so the two are not deformation equivalent.
#[test]
fn second_class_on_c2_times_d4() {
    let catalog = common::catalog();
    let entry = catalog.entry("C2xD4").unwrap();
    let bases = classify_entry(catalog, entry, CatalogMethod::Bases).unwrap();
    let ambient = classify_entry(catalog, entry, CatalogMethod::Ambient).unwrap();
    assert_eq!(ambient.class_count(), 1);
    assert_eq!(bases.class_count(), 2);
    let profiles: Vec<_> = bases
        .classification
        .classes
        .iter()
        .map(|c| {
            let input = FujikiInput::new(c.representative.clone(), 2).unwrap();
            (
                entry.xiao_rank + fixed_surface_orbit_count(&input) as u64,
                singularity_profile(&input).unwrap(),
            )
        })
        .collect();
    assert_eq!(profiles[0].0, 14);
    assert_eq!(profiles[0].1.a2, 36);
    assert_eq!(profiles[1].0, 10);
    assert_eq!((profiles[1].1.a2, profiles[1].1.b4), (50, 2));
    assert_ne!(profiles[0], profiles[1]);
}

#[test]
fn a33_without_bridges_leaves_seven_classes() {
    let catalog = common::catalog();
    let entry = catalog.entry("A3,3").unwrap();
    let c = classify_entry_with(catalog, entry, CatalogMethod::Bases, false).unwrap();
    assert_eq!(c.class_count(), 7);
}

#[test]
fn two_class_groups_contain_the_identity_class() {
    let catalog = common::catalog();
    for name in ["A3,3", "C2^2wrC2", "C2^4:S3"] {
        let entry = catalog.entry(name).unwrap();
        let c = classify_entry(catalog, entry, CatalogMethod::Bases).unwrap();
        assert!(
            c.classification.classes[0].representative.is_identity_map(),
            "{name}"
        );
    }
}

/// The alternate embedding of C₂²≀C₂ used for classification yields the same
/// two orbifolds as the displayed representatives.
#[test]
fn alternate_embedding_classes_match_displayed_rows() {
    let catalog = common::catalog();
    let entry = catalog.entry("C2^2wrC2").unwrap();
    let c = classify_entry(catalog, entry, CatalogMethod::Bases).unwrap();
    let mut found: Vec<(u64, u64)> = c
        .classification
        .classes
        .iter()
        .map(|class| {
            let input = FujikiInput::new(class.representative.clone(), 2).unwrap();
            let p = singularity_profile(&input).unwrap();
            (
                entry.xiao_rank + fixed_surface_orbit_count(&input) as u64,
                p.a2,
            )
        })
        .collect();
    let mut reference: Vec<(u64, u64)> = ["id", "not-id"]
        .iter()
        .map(|l| {
            let row = catalog.golden_row("C2^2wrC2", l).unwrap();
            (row.b2 as u64, row.profile.a2)
        })
        .collect();
    found.sort();
    reference.sort();
    assert_eq!(found, reference);
}
