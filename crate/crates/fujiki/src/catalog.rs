//! Curated data: the admissible symplectic groups, their permutation
//! embeddings, invariant-lattice ranks, involution-class representatives,
//! bridge overgroups, deformation facts and the reference tables used as
//! regression fixtures.
//!
//! Reference tables are fixtures only; every computed value is rederived from
//! the group data by [`compute_row`].

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fixedpoints::{fixed_surface_orbit_count, FixedPointError, FujikiInput};
use crate::invariants::{compute_invariants, InvariantError, InvariantSet, Rational, SeriesEntry};
use crate::involutions::{
    classify_involutions, enumerate_valid_involutions, inversion_automorphism, is_valid_involution,
    AmbientSource, Bridge, Classification, EnumerationMethod, GroupInvolution, InvolutionError,
    MAX_SYMMETRIC_SCAN_DEGREE,
};
use crate::permcore::{
    close_group, group_from_cycle_strings, parse_permutation, symmetric_group, GroupTable, Perm,
    PermError,
};
use crate::singularities::{singularity_profile, SingularityError, SingularityProfile};

/// The catalog compiled into the library.
pub const BUILTIN_CATALOG: &str = include_str!("../data/catalog.json");

/// The only schema version this library reads.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read catalog file: {0}")]
    Io(#[from] std::io::Error),
    #[error("catalog does not match the schema: {0}")]
    Schema(String),
    #[error("catalog invariant violated for {entry}: {reason}")]
    Invariant { entry: String, reason: String },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("group `{group}` has no involution class `{class}`")]
    UnknownClass { group: String, class: String },
    #[error("unknown overgroup `{0}`")]
    UnknownOvergroup(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error(transparent)]
    FixedPoints(#[from] FixedPointError),
    #[error(transparent)]
    Singularity(#[from] SingularityError),
    #[error(transparent)]
    Invariants(#[from] InvariantError),
}

fn invariant(entry: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::Invariant {
        entry: entry.to_string(),
        reason: reason.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DescriptorKind {
    Identity,
    Inversion,
    Conjugation,
}

/// How one involution-class representative is built from the group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionDescriptor {
    /// `unique` for single-class groups, otherwise `id` / `not-id`.
    pub label: String,
    pub kind: DescriptorKind,
    /// Cycle string of the conjugating permutation, for `conjugation`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<String>,
}

impl InvolutionDescriptor {
    pub fn build(&self, group: &Arc<GroupTable>) -> Result<GroupInvolution, CatalogError> {
        Ok(match self.kind {
            DescriptorKind::Identity => GroupInvolution::identity(group.clone()),
            DescriptorKind::Inversion => inversion_automorphism(group)?,
            DescriptorKind::Conjugation => {
                let text = self.conjugator.as_deref().ok_or_else(|| {
                    CatalogError::Schema(format!("class `{}` lacks a conjugator", self.label))
                })?;
                let c = parse_permutation(text, group.degree())?;
                GroupInvolution::conjugation(group.clone(), &c)?
            }
        })
    }
}

/// A second permutation embedding of the same abstract group, used where
/// classification is carried out away from the displayed embedding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub degree: usize,
    pub generators: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BridgeMode {
    /// Use the whole overgroup as the ambient group.
    Whole,
    /// Search subgroups `⟨G, h⟩` of `target_order` inside the overgroup.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeSpec {
    pub name: String,
    /// Name of an entry of the catalog's `overgroups` list.
    pub overgroup: String,
    pub mode: BridgeMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_order: Option<usize>,
    #[serde(default)]
    pub require_trivial_center: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Embedding>,
    /// Whether an exhaustive scan of the symmetric group is feasible.
    pub ambient_scan: bool,
    #[serde(default)]
    pub bridges: Vec<BridgeSpec>,
    pub expected_classes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub display: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    /// `(order, index)` in the SmallGroups library.
    pub small_group_id: (usize, usize),
    pub degree: usize,
    pub generators: Vec<String>,
    pub abelian: bool,
    pub admissible: bool,
    pub xiao_rank: u64,
    pub xiao_rank_source: String,
    pub involution_classes: Vec<InvolutionDescriptor>,
    pub classification: ClassificationSpec,
    #[serde(default)]
    pub notes: Vec<String>,
    /// b₂ to check the rank against when the group has no reference-table row.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_b2: Option<u64>,
    /// Rows of this group are left out of the computed table.
    #[serde(default)]
    pub excluded_from_table: bool,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.small_group_id.0
    }

    /// The group in its displayed embedding.
    pub fn group(&self) -> Result<Arc<GroupTable>, CatalogError> {
        Ok(Arc::new(group_from_cycle_strings(
            &self.generators,
            self.degree,
        )?))
    }

    /// The group in the embedding used for classification.
    pub fn classification_group(&self) -> Result<Arc<GroupTable>, CatalogError> {
        match &self.classification.embedding {
            Some(e) => Ok(Arc::new(group_from_cycle_strings(&e.generators, e.degree)?)),
            None => self.group(),
        }
    }

    pub fn class(&self, label: &str) -> Result<&InvolutionDescriptor, CatalogError> {
        self.involution_classes
            .iter()
            .find(|c| c.label == label)
            .ok_or_else(|| CatalogError::UnknownClass {
                group: self.name.clone(),
                class: label.to_string(),
            })
    }

    pub fn matches(&self, key: &str) -> bool {
        self.name == key
            || self.aliases.iter().any(|a| a == key)
            || self.name.eq_ignore_ascii_case(key)
            || self.aliases.iter().any(|a| a.eq_ignore_ascii_case(key))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// The full symmetric group of the given degree.
    Symmetric,
    /// Monomial automorphisms of the Fermat quartic acting on its 64 points
    /// `(iᵃ : iᵇ : iᶜ : 1)`, generated by `u, v, w, t1, t2, t3`.
    FermatQuartic,
    /// The determinant-one monomial subgroup of the former.
    FermatQuarticSpecial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OvergroupSpec {
    pub name: String,
    pub degree: usize,
    pub order: usize,
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// One row of the reference table of fourfold invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub group: String,
    pub class_label: String,
    pub b2: i64,
    pub profile: SingularityProfile,
    pub b4: i64,
    pub chi: i64,
    /// Exact rationals as `p/q` strings.
    pub c4: String,
    pub c2_squared: String,
    pub cbar: String,
}

/// One row of the reference table after deformation deduplication.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub b2: i64,
    pub group: String,
    pub profile: SingularityProfile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactKind {
    ProvenEquivalent,
    CandidateEquivalent,
}

/// A known deformation equivalence between `(group, class)` keys. For proven
/// facts the first member collapses onto the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationFact {
    pub kind: FactKind,
    pub label: String,
    pub members: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesB2 {
    pub name: String,
    pub b2: u64,
}

/// An irreducible symplectic orbifold `S(C₂ᵏ)^[3]` of dimension 6.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionSixFact {
    pub group: String,
    pub k: u32,
    pub b2: u64,
}

/// A previously published, irrational value of `C(c₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoricalSurd {
    pub group: String,
    pub published_surd: String,
    pub radicand: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub schema_version: u32,
    pub groups: Vec<CatalogEntry>,
    pub overgroups: Vec<OvergroupSpec>,
    pub golden: Vec<GoldenRow>,
    pub deduplicated_fixture: Vec<FixtureRow>,
    pub deformation_facts: Vec<DeformationFact>,
    pub series: Vec<SeriesEntry>,
    pub series_b2_reference: Vec<SeriesB2>,
    pub dimension_six: Vec<DimensionSixFact>,
    pub historical: Vec<HistoricalSurd>,
}

/// Loads the catalog from `path`, or the built-in one, and checks every
/// entry invariant.
pub fn load_catalog(path: Option<&Path>) -> Result<Catalog, CatalogError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)?,
        None => BUILTIN_CATALOG.to_string(),
    };
    parse_catalog(&text)
}

/// The built-in catalog; panics only if the compiled-in data is corrupt.
pub fn builtin_catalog() -> Catalog {
    parse_catalog(BUILTIN_CATALOG).expect("built-in catalog is valid")
}

/// Parses and validates catalog text.
pub fn parse_catalog(text: &str) -> Result<Catalog, CatalogError> {
    let catalog: Catalog =
        serde_json::from_str(text).map_err(|e| CatalogError::Schema(e.to_string()))?;
    catalog.validate()?;
    Ok(catalog)
}

impl Catalog {
    /// Checks every entry invariant; called by [`load_catalog`].
    pub fn validate(&self) -> Result<(), CatalogError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CatalogError::Schema(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let mut keys: HashMap<&str, &str> = HashMap::new();
        for e in &self.groups {
            for k in std::iter::once(&e.name).chain(&e.aliases) {
                if let Some(prev) = keys.insert(k, &e.name) {
                    return Err(invariant(&e.name, format!("key `{k}` also names {prev}")));
                }
            }
        }
        let overgroup_names: Vec<&str> = self.overgroups.iter().map(|o| o.name.as_str()).collect();
        self.groups
            .par_iter()
            .try_for_each(|e| self.validate_entry(e, &overgroup_names))?;
        for row in &self.golden {
            let e = self.entry(&row.group)?;
            e.class(&row.class_label)?;
            for v in [&row.c4, &row.c2_squared] {
                Rational::from_str(v)
                    .map_err(|_| invariant(&row.group, format!("`{v}` is not a rational")))?;
            }
        }
        for fact in &self.deformation_facts {
            if fact.members.len() < 2 {
                return Err(invariant(
                    &fact.label,
                    "a deformation fact needs two members",
                ));
            }
        }
        Ok(())
    }

    fn validate_entry(&self, e: &CatalogEntry, overgroups: &[&str]) -> Result<(), CatalogError> {
        let group = e.group()?;
        if group.order() != e.order() {
            return Err(invariant(
                &e.name,
                format!(
                    "generators close to order {}, not {}",
                    group.order(),
                    e.order()
                ),
            ));
        }
        if group.is_abelian() != e.abelian {
            return Err(invariant(&e.name, "abelian flag disagrees with the group"));
        }
        if let Some(emb) = &e.classification.embedding {
            let alt = group_from_cycle_strings(&emb.generators, emb.degree)?;
            if alt.order() != e.order() {
                return Err(invariant(
                    &e.name,
                    "alternate embedding has the wrong order",
                ));
            }
        }
        for b in &e.classification.bridges {
            if !overgroups.contains(&b.overgroup.as_str()) {
                return Err(CatalogError::UnknownOvergroup(b.overgroup.clone()));
            }
        }
        if e.involution_classes.is_empty() {
            return Err(invariant(&e.name, "no involution classes"));
        }
        for d in &e.involution_classes {
            let theta = d.build(&group)?;
            if !is_valid_involution(&theta) {
                return Err(invariant(
                    &e.name,
                    format!("class `{}` is not valid", d.label),
                ));
            }
            let orbits = fixed_surface_orbit_count(&FujikiInput::new(theta, 2)?) as u64;
            let expected = match self.golden_row(&e.name, &d.label) {
                Some(row) => Some(row.b2 as u64),
                None => e.reference_b2,
            };
            match expected {
                Some(b2) if e.xiao_rank + orbits != b2 => {
                    return Err(invariant(
                        &e.name,
                        format!(
                            "rank {} + {orbits} orbits ≠ reference b2 {b2} for class `{}`",
                            e.xiao_rank, d.label
                        ),
                    ));
                }
                Some(_) => {}
                None => {
                    return Err(invariant(
                        &e.name,
                        format!("no reference b2 for `{}`", d.label),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Looks a group up by name or alias (case-insensitive fallback).
    pub fn entry(&self, key: &str) -> Result<&CatalogEntry, CatalogError> {
        self.groups
            .iter()
            .find(|e| e.name == key || e.aliases.iter().any(|a| a == key))
            .or_else(|| self.groups.iter().find(|e| e.matches(key)))
            .ok_or_else(|| CatalogError::UnknownGroup(key.to_string()))
    }

    pub fn golden_row(&self, group: &str, class_label: &str) -> Option<&GoldenRow> {
        self.golden
            .iter()
            .find(|r| r.group == group && r.class_label == class_label)
    }

    pub fn overgroup_spec(&self, name: &str) -> Result<&OvergroupSpec, CatalogError> {
        self.overgroups
            .iter()
            .find(|o| o.name == name)
            .ok_or_else(|| CatalogError::UnknownOvergroup(name.to_string()))
    }

    /// Builds a named overgroup and checks its advertised order.
    pub fn overgroup(&self, name: &str) -> Result<Arc<GroupTable>, CatalogError> {
        build_overgroup(self.overgroup_spec(name)?).map(Arc::new)
    }

    /// Every `(group, class)` pair that appears in the computed table, in
    /// catalog order.
    pub fn table_keys(&self) -> Vec<(&CatalogEntry, &InvolutionDescriptor)> {
        self.groups
            .iter()
            .filter(|e| !e.excluded_from_table)
            .flat_map(|e| e.involution_classes.iter().map(move |d| (e, d)))
            .collect()
    }
}

/// Builds an overgroup from its spec, checking the advertised order.
pub fn build_overgroup(spec: &OvergroupSpec) -> Result<GroupTable, CatalogError> {
    let group = match spec.construction {
        Some(Construction::Symmetric) => symmetric_group(spec.degree)?,
        Some(Construction::FermatQuartic) => close_group(&fermat_quartic_generators())?,
        Some(Construction::FermatQuarticSpecial) => close_group(&fermat_quartic_monomials(true))?,
        None => group_from_cycle_strings(&spec.generators, spec.degree)?,
    };
    if group.order() != spec.order {
        return Err(invariant(
            &spec.name,
            format!("closes to order {}, not {}", group.order(), spec.order),
        ));
    }
    Ok(group)
}

/// Every overgroup of the built-in catalog, by name.
pub fn builtin_overgroups() -> Result<BTreeMap<String, Arc<GroupTable>>, CatalogError> {
    let catalog = builtin_catalog();
    catalog
        .overgroups
        .par_iter()
        .map(|o| Ok((o.name.clone(), Arc::new(build_overgroup(o)?))))
        .collect()
}

/// Index of the point `(iᵃ : iᵇ : iᶜ : 1)`.
fn fermat_point(a: usize, b: usize, c: usize) -> usize {
    a + 4 * b + 16 * c
}

/// The permutation of the 64 points induced by `x_{s(k)} ↦ i^{e_{s(k)}} x_k`,
/// renormalized so the last coordinate is 1.
fn fermat_monomial(s: [usize; 4], e: [usize; 4]) -> Perm {
    let mut images = vec![0usize; 64];
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let v = [a, b, c, 0];
                let mut w = [0usize; 4];
                for k in 0..4 {
                    w[s[k]] = (v[k] + e[s[k]]) % 4;
                }
                let d = w[3];
                images[fermat_point(a, b, c)] =
                    fermat_point((w[0] + 4 - d) % 4, (w[1] + 4 - d) % 4, (w[2] + 4 - d) % 4);
            }
        }
    }
    Perm::from_images(&images).expect("monomial maps permute the points")
}

/// `u, v, w` (multiply x, y, z by i) and `t1, t2, t3` (swap x/y, y/z, z/t).
pub fn fermat_quartic_generators() -> Vec<Perm> {
    let id = [0, 1, 2, 3];
    vec![
        fermat_monomial(id, [1, 0, 0, 0]),
        fermat_monomial(id, [0, 1, 0, 0]),
        fermat_monomial(id, [0, 0, 1, 0]),
        fermat_monomial([1, 0, 2, 3], [0; 4]),
        fermat_monomial([0, 2, 1, 3], [0; 4]),
        fermat_monomial([0, 1, 3, 2], [0; 4]),
    ]
}

/// All projective monomial maps, optionally only those of determinant one.
pub fn fermat_quartic_monomials(special: bool) -> Vec<Perm> {
    let mut out = Vec::new();
    for s in permutations4() {
        let inversions = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| s[i] > s[j])
            .count();
        for code in 0..256usize {
            let e = [code % 4, code / 4 % 4, code / 16 % 4, code / 64];
            // det = sign(s)·i^{Σe}
            let phase = (e.iter().sum::<usize>() + 2 * (inversions % 2)) % 4;
            if special && phase != 0 {
                continue;
            }
            out.push(fermat_monomial(s, e));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&x| seen[x] = true);
                    if seen.iter().all(|&x| x) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Result of classifying the valid involutions of one catalog group.
#[derive(Clone, Debug)]
pub struct EntryClassification {
    pub group: Arc<GroupTable>,
    pub candidates: Vec<GroupInvolution>,
    pub classification: Classification,
}

impl EntryClassification {
    pub fn class_count(&self) -> usize {
        self.classification.classes.len()
    }
}

/// Which enumeration feeds the classification of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogMethod {
    /// Extension of irredundant generating families.
    Bases,
    /// Exhaustive scan of the symmetric group (degree ≤ 9).
    Ambient,
}

/// Bridges of an entry, with their overgroups built.
pub fn entry_bridges(catalog: &Catalog, entry: &CatalogEntry) -> Result<Vec<Bridge>, CatalogError> {
    entry
        .classification
        .bridges
        .iter()
        .map(|b| {
            let overgroup = catalog.overgroup(&b.overgroup)?;
            Ok(match b.mode {
                BridgeMode::Whole => Bridge::Whole {
                    name: b.name.clone(),
                    group: overgroup,
                },
                BridgeMode::Search => Bridge::Search {
                    name: b.name.clone(),
                    overgroup,
                    target_order: b.target_order.ok_or_else(|| {
                        CatalogError::Schema(format!("bridge `{}` lacks target_order", b.name))
                    })?,
                    require_trivial_center: b.require_trivial_center,
                },
            })
        })
        .collect()
}

/// Enumerates and classifies the valid involutions of an entry in its
/// classification embedding, using the shipped bridges.
pub fn classify_entry(
    catalog: &Catalog,
    entry: &CatalogEntry,
    method: CatalogMethod,
) -> Result<EntryClassification, CatalogError> {
    classify_entry_with(catalog, entry, method, true)
}

/// Like [`classify_entry`]; with `use_bridges = false` only `Ḡ = G` is tried.
pub fn classify_entry_with(
    catalog: &Catalog,
    entry: &CatalogEntry,
    method: CatalogMethod,
    use_bridges: bool,
) -> Result<EntryClassification, CatalogError> {
    // The symmetric-group scan only sees automorphisms induced by the
    // embedding, so it always runs on the displayed one; bridges shipped for
    // an alternate embedding do not apply there.
    let (group, enumeration, bridges) = match method {
        CatalogMethod::Bases => (
            entry.classification_group()?,
            EnumerationMethod::Bases,
            entry_bridges(catalog, entry)?,
        ),
        CatalogMethod::Ambient => {
            let group = entry.group()?;
            if group.degree() > MAX_SYMMETRIC_SCAN_DEGREE {
                return Err(InvolutionError::AmbientTooLarge(group.degree()).into());
            }
            let bridges = match entry.classification.embedding {
                Some(_) => Vec::new(),
                None => entry_bridges(catalog, entry)?,
            };
            (
                group,
                EnumerationMethod::Ambient(AmbientSource::Symmetric),
                bridges,
            )
        }
    };
    let bridges = if use_bridges { bridges } else { Vec::new() };
    let candidates = enumerate_valid_involutions(&group, enumeration)?;
    let classification = classify_involutions(&candidates, &bridges)?;
    Ok(EntryClassification {
        group,
        candidates,
        classification,
    })
}

/// One computed row of the fourfold table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputedRow {
    pub group: String,
    pub class_label: String,
    pub order: usize,
    pub orbit_count: usize,
    pub profile: SingularityProfile,
    pub invariants: InvariantSet,
}

impl ComputedRow {
    pub fn verified(&self) -> bool {
        self.invariants.verification.is_rational()
    }

    /// Exact comparison with a reference row.
    pub fn matches(&self, row: &GoldenRow) -> bool {
        let parse = |s: &str| Rational::from_str(s).ok();
        self.group == row.group
            && self.class_label == row.class_label
            && self.invariants.b2 == row.b2
            && self.profile == row.profile
            && self.invariants.b4 == row.b4
            && self.invariants.chi == row.chi
            && Some(&self.invariants.c4) == parse(&row.c4).as_ref()
            && Some(&self.invariants.c2_squared) == parse(&row.c2_squared).as_ref()
            && self.invariants.cbar_c2() == parse(&row.cbar).as_ref()
    }
}

/// Computes one row from scratch: involution, orbit count, singularities,
/// Betti and Chern numbers, rationality verdict.
pub fn compute_row(entry: &CatalogEntry, class_label: &str) -> Result<ComputedRow, CatalogError> {
    let group = entry.group()?;
    let theta = entry.class(class_label)?.build(&group)?;
    let input = FujikiInput::new(theta, 2)?;
    let orbit_count = fixed_surface_orbit_count(&input);
    let profile = singularity_profile(&input)?;
    let b2 = entry.xiao_rank as i64 + orbit_count as i64;
    let invariants = compute_invariants(group.order() as u64, &profile, b2)?;
    Ok(ComputedRow {
        group: entry.name.clone(),
        class_label: class_label.to_string(),
        order: group.order(),
        orbit_count,
        profile,
        invariants,
    })
}

/// Every table row, computed in parallel and returned in catalog order.
pub fn compute_table(catalog: &Catalog) -> Result<Vec<ComputedRow>, CatalogError> {
    catalog
        .table_keys()
        .par_iter()
        .map(|(e, d)| compute_row(e, &d.label))
        .collect()
}

/// The data deduplication looks at.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DedupKey {
    pub group: String,
    pub class_label: String,
    pub b2: i64,
    pub profile: SingularityProfile,
}

impl From<&ComputedRow> for DedupKey {
    fn from(r: &ComputedRow) -> Self {
        DedupKey {
            group: r.group.clone(),
            class_label: r.class_label.clone(),
            b2: r.invariants.b2,
            profile: r.profile,
        }
    }
}

impl From<&GoldenRow> for DedupKey {
    fn from(r: &GoldenRow) -> Self {
        DedupKey {
            group: r.group.clone(),
            class_label: r.class_label.clone(),
            b2: r.b2,
            profile: r.profile,
        }
    }
}

/// A row removed because it is deformation equivalent to a kept one (or to
/// a variety outside the table).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collapse {
    pub removed: (String, String),
    pub onto: (String, String),
    pub fact: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DedupResult {
    pub rows: Vec<DedupKey>,
    pub collapsed: Vec<Collapse>,
    /// Groups of remaining rows sharing `(b₂, profile)`: possibly equivalent.
    pub candidate_couples: Vec<Vec<DedupKey>>,
}

impl DedupResult {
    /// Lower bound on the number of deformation classes among the rows.
    pub fn minimum_classes(&self) -> usize {
        self.rows.len()
            - self
                .candidate_couples
                .iter()
                .map(|c| c.len() - 1)
                .sum::<usize>()
    }
}

/// Collapses proven-equivalent rows and flags rows with equal `(b₂, profile)`.
pub fn deformation_dedup(rows: &[DedupKey], facts: &[DeformationFact]) -> DedupResult {
    let mut kept: Vec<DedupKey> = rows.to_vec();
    let mut collapsed = Vec::new();
    for fact in facts
        .iter()
        .filter(|f| f.kind == FactKind::ProvenEquivalent)
    {
        let removed = &fact.members[0];
        let onto = &fact.members[1];
        let before = kept.len();
        kept.retain(|r| !(r.group == removed.0 && r.class_label == removed.1));
        if kept.len() < before {
            collapsed.push(Collapse {
                removed: removed.clone(),
                onto: onto.clone(),
                fact: fact.label.clone(),
            });
        }
    }
    let mut by_data: BTreeMap<(i64, SingularityProfile), Vec<DedupKey>> = BTreeMap::new();
    for r in &kept {
        by_data
            .entry((r.b2, r.profile))
            .or_default()
            .push(r.clone());
    }
    let mut candidate_couples: Vec<Vec<DedupKey>> =
        by_data.into_values().filter(|v| v.len() > 1).collect();
    // Report couples in table order of their first member.
    let position = |k: &DedupKey| kept.iter().position(|r| r == k).unwrap_or(usize::MAX);
    candidate_couples.sort_by_key(|c| c.iter().map(position).min());
    DedupResult {
        rows: kept,
        collapsed,
        candidate_couples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_loads() {
        let c = load_catalog(None).unwrap();
        assert_eq!(c.groups.len(), 34);
        assert_eq!(c.groups.iter().filter(|e| e.abelian).count(), 11);
        assert_eq!(c.golden.len(), 36);
    }

    #[test]
    fn lookup_by_alias() {
        let c = builtin_catalog();
        assert_eq!(c.entry("C2p2C4").unwrap().name, "C2^2:C4");
        assert_eq!(c.entry("a33").unwrap().name, "A3,3");
        assert!(matches!(c.entry("C5"), Err(CatalogError::UnknownGroup(_))));
    }

    #[test]
    fn schema_version_is_mandatory() {
        let mut v: serde_json::Value = serde_json::from_str(BUILTIN_CATALOG).unwrap();
        v.as_object_mut().unwrap().remove("schema_version");
        assert!(matches!(
            parse_catalog(&v.to_string()),
            Err(CatalogError::Schema(_))
        ));
    }

    #[test]
    fn wrong_rank_is_caught_at_load() {
        let mut v: serde_json::Value = serde_json::from_str(BUILTIN_CATALOG).unwrap();
        v["groups"][0]["xiao_rank"] = serde_json::json!(13);
        assert!(matches!(
            parse_catalog(&v.to_string()),
            Err(CatalogError::Invariant { .. })
        ));
    }

    #[test]
    fn wrong_order_is_caught_at_load() {
        let mut v: serde_json::Value = serde_json::from_str(BUILTIN_CATALOG).unwrap();
        v["groups"][4]["small_group_id"] = serde_json::json!([12, 1]);
        assert!(matches!(
            parse_catalog(&v.to_string()),
            Err(CatalogError::Invariant { .. })
        ));
    }

    #[test]
    fn fermat_constructions_agree() {
        let gens = fermat_quartic_generators();
        let whole = close_group(&gens).unwrap();
        assert_eq!(whole.order(), 1536);
        let all = fermat_quartic_monomials(false);
        assert_eq!(all.len(), 1536);
        assert!(all.iter().all(|p| whole.contains(p)));
        assert_eq!(fermat_quartic_monomials(true).len(), 384);
    }

    #[test]
    fn first_row_is_computed() {
        let c = builtin_catalog();
        let row = compute_row(c.entry("C2").unwrap(), "unique").unwrap();
        assert_eq!(row.orbit_count, 2);
        assert!(row.matches(&c.golden[0]));
    }
}
