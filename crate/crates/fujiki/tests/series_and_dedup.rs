mod common;

use std::collections::BTreeSet;

use fujiki::catalog::{compute_table, deformation_dedup, DedupKey, FactKind};
use fujiki::invariants::{rat, series_report};

#[test]
fn series_b2_values() {
    let catalog = common::catalog();
    let report = series_report(&catalog.series, 10).unwrap();
    assert_eq!(report.rows.len(), 14);
    for (row, reference) in report.rows.iter().zip(&catalog.series_b2_reference) {
        assert_eq!(row.name, reference.name);
        assert_eq!(row.b2, reference.b2);
    }
}

#[test]
fn equal_b2_series_are_distinct() {
    let report = series_report(&common::catalog().series, 10).unwrap();
    assert!(report
        .pairs
        .iter()
        .all(|p| p.distinct && p.irrational_for == (3..=10).collect::<Vec<_>>()));
    let ratios: BTreeSet<String> = report.pairs.iter().map(|p| p.ratio.clone()).collect();
    for listed in [
        (3, 4),
        (1, 2),
        (5, 6),
        (5, 8),
        (5, 9),
        (2, 3),
        (8, 9),
        (7, 8),
        (7, 12),
        (7, 16),
    ] {
        assert!(
            ratios.contains(&rat(listed.0, listed.1).to_string()),
            "{listed:?}"
        );
    }
}

#[test]
fn dedup_on_computed_rows() {
    let catalog = common::catalog();
    let rows = compute_table(catalog).unwrap();
    let keys: Vec<DedupKey> = rows.iter().map(DedupKey::from).collect();
    let result = deformation_dedup(&keys, &catalog.deformation_facts);
    assert_eq!(result.rows.len(), 32);
    assert_eq!(result.collapsed.len(), 4);
    let couples: Vec<BTreeSet<(String, String)>> = result
        .candidate_couples
        .iter()
        .map(|c| {
            c.iter()
                .map(|k| (k.group.clone(), k.class_label.clone()))
                .collect()
        })
        .collect();
    let expect = |a: (&str, &str), b: (&str, &str)| -> BTreeSet<(String, String)> {
        [a, b]
            .iter()
            .map(|(g, c)| (g.to_string(), c.to_string()))
            .collect()
    };
    assert_eq!(couples.len(), 3);
    assert!(couples.contains(&expect(("C2^2wrC2", "not-id"), ("D4", "unique"))));
    assert!(couples.contains(&expect(("C2^2:C4", "unique"), ("C4", "unique"))));
    assert!(couples.contains(&expect(("C2xS4", "unique"), ("D6", "unique"))));
    assert_eq!(result.minimum_classes(), 29);
    assert_eq!(result.minimum_classes() + catalog.dimension_six.len(), 33);
    let ours: BTreeSet<_> = result
        .rows
        .iter()
        .map(|k| (k.b2, k.group.clone(), k.profile))
        .collect();
    let fixture: BTreeSet<_> = catalog
        .deduplicated_fixture
        .iter()
        .map(|f| (f.b2, f.group.clone(), f.profile))
        .collect();
    assert_eq!(ours, fixture);
}

#[test]
fn dedup_on_reference_rows_agrees() {
    let catalog = common::catalog();
    let keys: Vec<DedupKey> = catalog.golden.iter().map(DedupKey::from).collect();
    let result = deformation_dedup(&keys, &catalog.deformation_facts);
    assert_eq!(result.rows.len(), 32);
    assert_eq!(result.candidate_couples.len(), 3);
}

#[test]
fn proven_facts_are_the_five_listed() {
    let facts = &common::catalog().deformation_facts;
    assert_eq!(facts.len(), 5);
    assert!(facts.iter().all(|f| f.kind == FactKind::ProvenEquivalent));
}

#[test]
fn dimension_six_facts() {
    let d6 = &common::catalog().dimension_six;
    let b2: Vec<u64> = d6.iter().map(|f| f.b2).collect();
    assert_eq!(b2, [15, 11, 9, 8]);
    assert_eq!(d6.iter().map(|f| f.k).collect::<Vec<_>>(), [1, 2, 3, 4]);
}
