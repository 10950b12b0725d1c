//! Valid involutions of a permutation group: construction, enumeration by two
//! independent methods, and classification up to the deformation-induced
//! equivalence `θ₂(h₁ g h₁⁻¹) = h₂ θ₁(g) h₂⁻¹`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::permcore::{symmetric_involutions, GroupTable, Perm, PermError};

/// Largest degree for which the whole symmetric group is scanned.
pub const MAX_SYMMETRIC_SCAN_DEGREE: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("the family does not generate the group")]
    FamilyDoesNotGenerate,
    #[error("family element {0} is not in the group")]
    NotInGroup(String),
    #[error("inversion is not an automorphism of a non-abelian group")]
    NotAbelian,
    #[error("exhaustive scan of the symmetric group refused for degree {0} > {MAX_SYMMETRIC_SCAN_DEGREE}; supply an explicit overgroup")]
    AmbientTooLarge(usize),
    #[error("conjugation by {0} does not normalize the group")]
    NotNormalizing(String),
    #[error("conjugation by {0} does not induce an involution")]
    NotInvolutive(String),
    #[error("the overgroup does not contain the group")]
    NotContained,
    #[error("involutions live on different groups")]
    DifferentGroups,
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// How an involution was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Identity,
    Inversion,
    Conjugation(Perm),
    GeneratorFamily(Vec<Perm>),
}

/// An automorphism θ of a group with θ² = id, stored as an element-index map.
#[derive(Clone)]
pub struct GroupInvolution {
    group: Arc<GroupTable>,
    map: Vec<usize>,
    provenance: Provenance,
}

impl fmt::Debug for GroupInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupInvolution({})", self.describe())
    }
}

impl PartialEq for GroupInvolution {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.map == other.map
    }
}

impl Eq for GroupInvolution {}

pub(crate) fn same_group(a: &GroupTable, b: &GroupTable) -> bool {
    std::ptr::eq(a, b) || (a.degree() == b.degree() && a.elements() == b.elements())
}

impl GroupInvolution {
    /// Wraps an explicit map, checking that it is an involutive automorphism.
    pub fn from_map(
        group: Arc<GroupTable>,
        map: Vec<usize>,
        provenance: Provenance,
    ) -> Option<Self> {
        let n = group.order();
        if map.len() != n || map.iter().any(|&x| x >= n) {
            return None;
        }
        if map.iter().enumerate().any(|(g, &t)| map[t] != g) {
            return None;
        }
        let gens = group.generator_indices();
        for a in 0..n {
            for &x in &gens {
                if map[group.mul(a, x)] != group.mul(map[a], map[x]) {
                    return None;
                }
            }
        }
        Some(GroupInvolution {
            group,
            map,
            provenance,
        })
    }

    pub fn identity(group: Arc<GroupTable>) -> Self {
        let map = (0..group.order()).collect();
        GroupInvolution {
            group,
            map,
            provenance: Provenance::Identity,
        }
    }

    /// Conjugation by an order-≤2 permutation normalizing the group.
    pub fn conjugation(group: Arc<GroupTable>, c: &Perm) -> Result<Self, InvolutionError> {
        if c.degree() != group.degree() {
            return Err(PermError::DegreeMismatch {
                left: c.degree(),
                right: group.degree(),
            }
            .into());
        }
        if !group.is_normalized_by(c) {
            return Err(InvolutionError::NotNormalizing(c.cycle_string()));
        }
        let map: Vec<usize> = group
            .elements()
            .iter()
            .map(|g| {
                group
                    .index_of(&g.conjugate_by_unchecked(c))
                    .expect("normalized")
            })
            .collect();
        if map.iter().enumerate().any(|(g, &t)| map[t] != g) {
            return Err(InvolutionError::NotInvolutive(c.cycle_string()));
        }
        let provenance = if c.is_identity() {
            Provenance::Identity
        } else {
            Provenance::Conjugation(c.clone())
        };
        Ok(GroupInvolution {
            group,
            map,
            provenance,
        })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// θ(g) by element index.
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    /// The full map, indexed by canonical element index.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply_perm(&self, g: &Perm) -> Option<Perm> {
        let i = self.group.index_of(g)?;
        Some(self.group.element(self.map[i]).clone())
    }

    pub fn is_identity_map(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// F(θ) = {g : θ(g) = g⁻¹}, ascending.
    pub fn fixed_inversion_set(&self) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| self.map[g] == self.group.inv(g))
            .collect()
    }

    /// Images of the generators, as cycle strings.
    pub fn generator_images(&self) -> Vec<String> {
        self.group
            .generator_indices()
            .iter()
            .map(|&g| self.group.element(self.map[g]).cycle_string())
            .collect()
    }

    /// Short human-readable description of the provenance.
    pub fn describe(&self) -> String {
        match &self.provenance {
            Provenance::Identity => "id".to_string(),
            Provenance::Inversion => "inv".to_string(),
            Provenance::Conjugation(c) => c.cycle_string(),
            Provenance::GeneratorFamily(f) => {
                let parts: Vec<String> = f.iter().map(|p| p.cycle_string()).collect();
                format!("family[{}]", parts.join(", "))
            }
        }
    }

    fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }
}

/// Builds the unique automorphism inverting every member of `family`, if it exists.
///
/// Returns `Ok(None)` when the assignment `gᵢ ↦ gᵢ⁻¹` does not extend to an
/// automorphism.
pub fn extend_generator_inversion(
    group: &Arc<GroupTable>,
    family: &[Perm],
) -> Result<Option<GroupInvolution>, InvolutionError> {
    let idx = family
        .iter()
        .map(|p| {
            group
                .index_of(p)
                .ok_or_else(|| InvolutionError::NotInGroup(p.cycle_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if group.generated(&idx).count_ones() != group.order() {
        return Err(InvolutionError::FamilyDoesNotGenerate);
    }
    Ok(extend_partial(group, &idx).map(|map| GroupInvolution {
        group: group.clone(),
        map: map
            .into_iter()
            .map(|x| x.expect("total on generated group"))
            .collect(),
        provenance: Provenance::GeneratorFamily(family.to_vec()),
    }))
}

/// Propagates θ(x) = x⁻¹ over `⟨family⟩` by θ(a·x) = θ(a)·θ(x); `None` on conflict.
///
/// A conflict-free propagation is a well-defined homomorphism on the generated
/// subgroup, and it squares to the identity because it does so on the family.
fn extend_partial(group: &GroupTable, family: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; group.order()];
    map[group.identity()] = Some(group.identity());
    let mut frontier = vec![group.identity()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            let ta = map[a].expect("assigned");
            for &x in family {
                let p = group.mul(a, x);
                let tp = group.mul(ta, group.inv(x));
                match map[p] {
                    Some(existing) if existing != tp => return None,
                    Some(_) => {}
                    None => {
                        map[p] = Some(tp);
                        next.push(p);
                    }
                }
            }
        }
        frontier = next;
    }
    Some(map)
}

/// θ(g) = g⁻¹ on an abelian group.
pub fn inversion_automorphism(group: &Arc<GroupTable>) -> Result<GroupInvolution, InvolutionError> {
    if !group.is_abelian() {
        return Err(InvolutionError::NotAbelian);
    }
    let map = (0..group.order()).map(|g| group.inv(g)).collect();
    Ok(GroupInvolution {
        group: group.clone(),
        map,
        provenance: Provenance::Inversion,
    })
}

/// True iff the inverted elements F(θ) generate the whole group.
pub fn is_valid_involution(theta: &GroupInvolution) -> bool {
    let f = theta.fixed_inversion_set();
    theta.group.generated(&f).count_ones() == theta.group.order()
}

/// Where conjugating elements come from in the ambient method.
#[derive(Clone, Copy)]
pub enum AmbientSource<'a> {
    /// Every order-≤2 permutation of the group's own degree (degree ≤ 9 only).
    Symmetric,
    /// Order-≤2 elements of an explicit overgroup.
    Overgroup(&'a GroupTable),
}

#[derive(Clone, Copy)]
pub enum EnumerationMethod<'a> {
    /// Extend every irredundant generating family by inversion.
    Bases,
    /// Conjugation by order-≤2 elements of an ambient group.
    Ambient(AmbientSource<'a>),
}

/// All distinct valid involutions found by the chosen method, canonically ordered.
pub fn enumerate_valid_involutions(
    group: &Arc<GroupTable>,
    method: EnumerationMethod<'_>,
) -> Result<Vec<GroupInvolution>, InvolutionError> {
    match method {
        EnumerationMethod::Bases => Ok(valid_involutions_by_bases(group)),
        EnumerationMethod::Ambient(source) => valid_involutions_by_ambient(group, source),
    }
}

/// Bases method, as a depth-first search over (subgroup, partial map) states.
///
/// Every basis is reached by adding one element outside the current
/// subgroup at a time, and the continuation of a state depends only on its
/// partial map, so memoizing visited maps yields exactly the set of maps
/// obtained by extending every irredundant generating family.
fn valid_involutions_by_bases(group: &Arc<GroupTable>) -> Vec<GroupInvolution> {
    let n = group.order();
    if group.is_abelian() {
        // On an abelian group any valid involution agrees with inversion on a
        // generating set, hence equals it.
        return vec![inversion_automorphism(group).expect("abelian")];
    }
    let mut found: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(family) = stack.pop() {
        let Some(partial) = extend_partial(group, &family) else {
            continue;
        };
        let key: Vec<u32> = partial
            .iter()
            .map(|x| x.map_or(u32::MAX, |v| v as u32))
            .collect();
        if !visited.insert(key) {
            continue;
        }
        if partial.iter().all(Option::is_some) {
            let map: Vec<usize> = partial.into_iter().map(Option::unwrap).collect();
            found.entry(map).or_insert(family);
            continue;
        }
        for x in (0..n).rev() {
            if partial[x].is_none() {
                let mut next = family.clone();
                next.push(x);
                stack.push(next);
            }
        }
    }
    found
        .into_iter()
        .map(|(map, family)| {
            let perms = family.iter().map(|&i| group.element(i).clone()).collect();
            let theta = GroupInvolution {
                group: group.clone(),
                map,
                provenance: Provenance::GeneratorFamily(perms),
            };
            if theta.is_identity_map() {
                theta.with_provenance(Provenance::Identity)
            } else {
                theta
            }
        })
        .collect()
}

/// Literal bases method: enumerate every irredundant generating set of size
/// at most `max_size` and extend each one. Exponential; meant for small groups
/// and cross-checks.
pub fn valid_involutions_from_irredundant_sets(
    group: &Arc<GroupTable>,
    max_size: usize,
) -> Vec<GroupInvolution> {
    let mut found: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for basis in group.irredundant_generating_sets(max_size) {
        if let Some(partial) = extend_partial(group, &basis) {
            let map: Vec<usize> = partial.into_iter().map(|x| x.expect("total")).collect();
            found.entry(map).or_insert(basis);
        }
    }
    found
        .into_iter()
        .map(|(map, family)| GroupInvolution {
            group: group.clone(),
            map,
            provenance: Provenance::GeneratorFamily(
                family.iter().map(|&i| group.element(i).clone()).collect(),
            ),
        })
        .collect()
}

fn valid_involutions_by_ambient(
    group: &Arc<GroupTable>,
    source: AmbientSource<'_>,
) -> Result<Vec<GroupInvolution>, InvolutionError> {
    let conjugators: Vec<Perm> = match source {
        AmbientSource::Symmetric => {
            if group.degree() > MAX_SYMMETRIC_SCAN_DEGREE {
                return Err(InvolutionError::AmbientTooLarge(group.degree()));
            }
            symmetric_involutions(group.degree())
        }
        AmbientSource::Overgroup(h) => {
            if !group.is_subgroup_of(h) {
                return Err(InvolutionError::NotContained);
            }
            h.elements()
                .iter()
                .filter(|p| p.order() <= 2)
                .cloned()
                .collect()
        }
    };
    // Conjugators come in canonical order, so the first one inducing a map is kept.
    let mut found: BTreeMap<Vec<usize>, Perm> = BTreeMap::new();
    for c in conjugators {
        if !group.is_normalized_by(&c) {
            continue;
        }
        let theta = GroupInvolution::conjugation(group.clone(), &c)?;
        if found.contains_key(&theta.map) || !is_valid_involution(&theta) {
            continue;
        }
        found.insert(theta.map, c);
    }
    Ok(found
        .into_iter()
        .map(|(map, c)| GroupInvolution {
            group: group.clone(),
            map,
            provenance: if c.is_identity() {
                Provenance::Identity
            } else {
                Provenance::Conjugation(c)
            },
        })
        .collect())
}

/// A certificate `(h₁, h₂)` of equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub h1: Perm,
    pub h2: Perm,
}

/// Elements of `ambient` normalizing `group`, in canonical order.
pub fn normalizer_elements(group: &GroupTable, ambient: &[Perm]) -> Vec<Perm> {
    ambient
        .iter()
        .filter(|h| group.is_normalized_by(h))
        .cloned()
        .collect()
}

/// Searches `(h₁, h₂)` with `h₁ = u∘h₂`, `u ∈ F(θ₂)`, `h₂` in `ambient`
/// normalizing the group, such that `θ₂(h₁ g h₁⁻¹) = h₂ θ₁(g) h₂⁻¹` for all g.
///
/// A witness proves equivalence; `None` proves nothing.
pub fn are_equivalent(
    theta1: &GroupInvolution,
    theta2: &GroupInvolution,
    ambient: &GroupTable,
) -> Result<Option<Witness>, InvolutionError> {
    let group = &theta1.group;
    if !same_group(group, &theta2.group) {
        return Err(InvolutionError::DifferentGroups);
    }
    if ambient.degree() != group.degree() {
        return Err(PermError::DegreeMismatch {
            left: ambient.degree(),
            right: group.degree(),
        }
        .into());
    }
    if !group.is_subgroup_of(ambient) {
        return Err(InvolutionError::NotContained);
    }
    let normalizer = normalizer_elements(group, ambient.elements());
    Ok(equivalence_witness(theta1, theta2, &normalizer))
}

/// The search of [`are_equivalent`] over a precomputed list of normalizing elements.
pub fn equivalence_witness(
    theta1: &GroupInvolution,
    theta2: &GroupInvolution,
    normalizer: &[Perm],
) -> Option<Witness> {
    let group = &theta1.group;
    let gens = group.generator_indices();
    // For each h₂: (h₂ g h₂⁻¹, h₂ θ₁(g) h₂⁻¹) per generator g, as indices.
    let actions: Vec<Vec<(usize, usize)>> = normalizer
        .iter()
        .map(|h| {
            gens.iter()
                .map(|&g| {
                    let cg = group.element(g).conjugate_by_unchecked(h);
                    let ct = group.element(theta1.map[g]).conjugate_by_unchecked(h);
                    (
                        group.index_of(&cg).expect("normalizes"),
                        group.index_of(&ct).expect("normalizes"),
                    )
                })
                .collect()
        })
        .collect();
    for u in theta2.fixed_inversion_set() {
        let ui = group.inv(u);
        for (h2, action) in normalizer.iter().zip(&actions) {
            let ok = action.iter().all(|&(cg, ct)| {
                let conj = group.mul(group.mul(u, cg), ui);
                theta2.map[conj] == ct
            });
            if ok {
                return Some(Witness {
                    h1: group.element(u).compose_unchecked(h2),
                    h2: h2.clone(),
                });
            }
        }
    }
    None
}

/// An overgroup used to certify equivalences.
#[derive(Clone)]
pub enum Bridge {
    /// Use the whole group as the ambient `Ḡ`.
    Whole {
        name: String,
        group: Arc<GroupTable>,
    },
    /// Search subgroups `⟨G, h⟩` of the given order inside the overgroup.
    Search {
        name: String,
        overgroup: Arc<GroupTable>,
        target_order: usize,
        require_trivial_center: bool,
    },
}

impl Bridge {
    pub fn name(&self) -> &str {
        match self {
            Bridge::Whole { name, .. } | Bridge::Search { name, .. } => name,
        }
    }
}

/// One union step of the classification.
#[derive(Clone, Debug)]
pub struct Merge {
    /// Canonical index (in the candidate list) of the two involutions compared.
    pub left: usize,
    pub right: usize,
    /// Name of the ambient group used ("G" for the group itself).
    pub bridge: String,
    /// For subgroup searches, the extra generator `h` with `Ḡ = ⟨G, h⟩`.
    pub extra_generator: Option<Perm>,
    pub witness: Witness,
}

/// A class of equivalent involutions.
#[derive(Clone, Debug)]
pub struct InvolutionClass {
    pub representative: GroupInvolution,
    pub members: Vec<GroupInvolution>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub classes: Vec<InvolutionClass>,
    pub merges: Vec<Merge>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.0[rb] = ra;
        } else if rb < ra {
            self.0[ra] = rb;
        }
    }
}

/// Union-find classification.
///
/// First every pair is compared with `Ḡ = G` and with each [`Bridge::Whole`];
/// then, between the remaining classes, the canonically least members are
/// compared through each [`Bridge::Search`].
pub fn classify_involutions(
    candidates: &[GroupInvolution],
    bridges: &[Bridge],
) -> Result<Classification, InvolutionError> {
    let mut cands: Vec<GroupInvolution> = candidates.to_vec();
    cands.sort_by(|a, b| a.map.cmp(&b.map));
    cands.dedup_by(|a, b| a.map == b.map);
    let Some(first) = cands.first() else {
        return Ok(Classification {
            classes: Vec::new(),
            merges: Vec::new(),
        });
    };
    let group = first.group.clone();
    if cands.iter().any(|c| !same_group(&c.group, &group)) {
        return Err(InvolutionError::DifferentGroups);
    }
    let mut ambients: Vec<(String, Vec<Perm>)> = vec![(
        "G".to_string(),
        normalizer_elements(&group, group.elements()),
    )];
    for b in bridges {
        if let Bridge::Whole { name, group: big } = b {
            if !group.is_subgroup_of(big) {
                return Err(InvolutionError::NotContained);
            }
            ambients.push((name.clone(), normalizer_elements(&group, big.elements())));
        }
    }
    let mut uf = UnionFind((0..cands.len()).collect());
    let mut merges = Vec::new();
    for (name, normalizer) in &ambients {
        for i in 0..cands.len() {
            for j in i + 1..cands.len() {
                if uf.find(i) == uf.find(j) {
                    continue;
                }
                if let Some(w) = equivalence_witness(&cands[i], &cands[j], normalizer) {
                    uf.union(i, j);
                    merges.push(Merge {
                        left: i,
                        right: j,
                        bridge: name.clone(),
                        extra_generator: None,
                        witness: w,
                    });
                }
            }
        }
    }
    for b in bridges {
        let Bridge::Search {
            name,
            overgroup,
            target_order,
            require_trivial_center,
        } = b
        else {
            continue;
        };
        let mut searcher = BridgeSearcher::new(&group, overgroup, *target_order)?;
        searcher.require_trivial_center = *require_trivial_center;
        loop {
            let roots: Vec<usize> = {
                let mut r: Vec<usize> = (0..cands.len()).map(|i| uf.find(i)).collect();
                r.sort_unstable();
                r.dedup();
                r
            };
            let mut merged = false;
            'pairs: for (a, &i) in roots.iter().enumerate() {
                for &j in &roots[a + 1..] {
                    if let Some((h, w)) = searcher.search(&cands[i], &cands[j]) {
                        uf.union(i, j);
                        merges.push(Merge {
                            left: i,
                            right: j,
                            bridge: name.clone(),
                            extra_generator: Some(h),
                            witness: w,
                        });
                        merged = true;
                        break 'pairs;
                    }
                }
            }
            if !merged {
                break;
            }
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..cands.len() {
        by_root.entry(uf.find(i)).or_default().push(i);
    }
    let classes = by_root
        .into_values()
        .map(|members| InvolutionClass {
            representative: cands[members[0]].clone(),
            members: members.iter().map(|&m| cands[m].clone()).collect(),
        })
        .collect();
    Ok(Classification { classes, merges })
}

/// Cached search for bridges `⟨G, h⟩` of a fixed order inside an overgroup.
pub struct BridgeSearcher<'a> {
    group: &'a Arc<GroupTable>,
    candidates: Vec<Perm>,
    target_order: usize,
    /// Only accept bridges whose center is trivial.
    pub require_trivial_center: bool,
    cache: HashMap<Perm, Option<Arc<Vec<Perm>>>>,
}

impl<'a> BridgeSearcher<'a> {
    pub fn new(
        group: &'a Arc<GroupTable>,
        overgroup: &GroupTable,
        target_order: usize,
    ) -> Result<Self, InvolutionError> {
        if !group.is_subgroup_of(overgroup) {
            return Err(InvolutionError::NotContained);
        }
        let candidates = normalizer_elements(group, overgroup.elements());
        Ok(BridgeSearcher {
            group,
            candidates,
            target_order,
            require_trivial_center: false,
            cache: HashMap::new(),
        })
    }

    /// Elements of `⟨G, h⟩` if it has the target order (and passes the center filter).
    fn bridge_for(&mut self, h: &Perm) -> Option<Arc<Vec<Perm>>> {
        if let Some(hit) = self.cache.get(h) {
            return hit.clone();
        }
        let mut gens = self.group.generators().to_vec();
        gens.push(h.clone());
        let result = close_capped(&gens, self.target_order)
            .filter(|elements| elements.len() == self.target_order)
            .filter(|elements| !self.require_trivial_center || has_trivial_center(elements, &gens))
            .map(Arc::new);
        self.cache.insert(h.clone(), result.clone());
        result
    }

    /// First `h` (canonical order) outside G such that `⟨G, h⟩` has the target
    /// order and certifies `θ₁ ~ θ₂`.
    pub fn search(
        &mut self,
        theta1: &GroupInvolution,
        theta2: &GroupInvolution,
    ) -> Option<(Perm, Witness)> {
        if self.target_order == self.group.order() {
            let normalizer = normalizer_elements(self.group, self.group.elements());
            return equivalence_witness(theta1, theta2, &normalizer)
                .map(|w| (Perm::identity(self.group.degree()), w));
        }
        let mut tried: HashSet<Arc<Vec<Perm>>> = HashSet::new();
        let candidates = self.candidates.clone();
        for h in candidates {
            if self.group.contains(&h) {
                continue;
            }
            let Some(bridge) = self.bridge_for(&h) else {
                continue;
            };
            // Distinct h often generate the same bridge; test each bridge once.
            if !tried.insert(bridge.clone()) {
                continue;
            }
            let normalizer = normalizer_elements(self.group, &bridge);
            if let Some(w) = equivalence_witness(theta1, theta2, &normalizer) {
                return Some((h, w));
            }
        }
        None
    }
}

/// `overgroup_bridge_search`: an extra generator `h ∈ H` with `|⟨G, h⟩| =
/// target_order` whose closure certifies `θ₁ ~ θ₂`.
pub fn overgroup_bridge_search(
    overgroup: &GroupTable,
    theta1: &GroupInvolution,
    theta2: &GroupInvolution,
    target_order: usize,
) -> Result<Option<Perm>, InvolutionError> {
    if !same_group(&theta1.group, &theta2.group) {
        return Err(InvolutionError::DifferentGroups);
    }
    let mut searcher = BridgeSearcher::new(&theta1.group, overgroup, target_order)?;
    Ok(searcher.search(theta1, theta2).map(|(h, _)| h))
}

/// Closure of `gens` as a sorted element list, or `None` once it exceeds `cap`.
pub fn close_capped(gens: &[Perm], cap: usize) -> Option<Vec<Perm>> {
    let degree = gens.first()?.degree();
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = g.compose_unchecked(x);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort();
    Some(out)
}

fn has_trivial_center(elements: &[Perm], gens: &[Perm]) -> bool {
    elements.iter().all(|z| {
        z.is_identity()
            || gens
                .iter()
                .any(|g| g.compose_unchecked(z) != z.compose_unchecked(g))
    })
}

/// Classifies every group in parallel; a convenience for callers with many groups.
pub fn classify_many(
    jobs: &[(Vec<GroupInvolution>, Vec<Bridge>)],
) -> Vec<Result<Classification, InvolutionError>> {
    jobs.par_iter()
        .map(|(cands, bridges)| classify_involutions(cands, bridges))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::group_from_cycle_strings;

    fn group(gens: &[&str], n: usize) -> Arc<GroupTable> {
        Arc::new(group_from_cycle_strings(gens, n).unwrap())
    }

    #[test]
    fn identity_on_klein_group_from_family() {
        let g = group(&["(0,1)", "(2,3)"], 4);
        let fam = vec![
            g.element(g.generator_indices()[0]).clone(),
            g.element(g.generator_indices()[1]).clone(),
        ];
        let theta = extend_generator_inversion(&g, &fam).unwrap().unwrap();
        assert!(theta.is_identity_map());
    }

    #[test]
    fn inversion_on_cyclic_group() {
        let c3 = group(&["(0,1,2)"], 3);
        let fam = vec![parse("(0,1,2)", 3)];
        let theta = extend_generator_inversion(&c3, &fam).unwrap().unwrap();
        assert_eq!(theta, inversion_automorphism(&c3).unwrap());
        let c4 = group(&["(0,1,2,3)"], 4);
        let inv = inversion_automorphism(&c4).unwrap();
        assert_eq!(
            inv.apply_perm(&parse("(0,1,2,3)", 4)).unwrap(),
            parse("(0,3,2,1)", 4)
        );
        let s3 = group(&["(0,1)", "(0,1,2)"], 3);
        assert_eq!(
            inversion_automorphism(&s3),
            Err(InvolutionError::NotAbelian)
        );
    }

    fn parse(s: &str, n: usize) -> Perm {
        crate::permcore::parse_permutation(s, n).unwrap()
    }

    #[test]
    fn family_must_generate() {
        let s3 = group(&["(0,1)", "(0,1,2)"], 3);
        assert_eq!(
            extend_generator_inversion(&s3, &[parse("(0,1)", 3)]).unwrap_err(),
            InvolutionError::FamilyDoesNotGenerate
        );
    }

    #[test]
    fn validity_examples() {
        let s3 = group(&["(0,1)", "(0,1,2)"], 3);
        assert!(is_valid_involution(&GroupInvolution::identity(s3)));
        let c3 = group(&["(0,1,2)"], 3);
        assert!(!is_valid_involution(&GroupInvolution::identity(c3.clone())));
        assert!(is_valid_involution(&inversion_automorphism(&c3).unwrap()));
    }

    #[test]
    fn ambient_refuses_large_degree() {
        let g = group(&["(0,1,2,3,4,5,6,7,8,9)"], 10);
        assert!(matches!(
            enumerate_valid_involutions(&g, EnumerationMethod::Ambient(AmbientSource::Symmetric)),
            Err(InvolutionError::AmbientTooLarge(10))
        ));
    }

    #[test]
    fn reflexive_witness_is_trivial() {
        let s4 = group(&["(0,1)", "(0,1,2,3)"], 4);
        let id = GroupInvolution::identity(s4.clone());
        let w = are_equivalent(&id, &id, &s4).unwrap().unwrap();
        assert!(w.h1.is_identity() && w.h2.is_identity());
    }

    #[test]
    fn inner_involutions_of_s4_are_equivalent() {
        let s4 = group(&["(0,1)", "(0,1,2,3)"], 4);
        let a = GroupInvolution::conjugation(s4.clone(), &parse("(0,1)", 4)).unwrap();
        let b = GroupInvolution::conjugation(s4.clone(), &parse("(2,3)", 4)).unwrap();
        assert!(are_equivalent(&a, &b, &s4).unwrap().is_some());
    }

    #[test]
    fn abelian_groups_have_only_inversion() {
        let g = group(&["(0,1)", "(2,3,4,5)"], 6);
        let by_bases = enumerate_valid_involutions(&g, EnumerationMethod::Bases).unwrap();
        let by_scan =
            enumerate_valid_involutions(&g, EnumerationMethod::Ambient(AmbientSource::Symmetric))
                .unwrap();
        assert_eq!(by_bases.len(), 1);
        assert_eq!(by_bases, by_scan);
        assert_eq!(valid_involutions_from_irredundant_sets(&g, 4), by_bases);
    }

    #[test]
    fn capped_closure() {
        let gens = vec![parse("(0,1)", 4), parse("(0,1,2,3)", 4)];
        assert!(close_capped(&gens, 23).is_none());
        assert_eq!(close_capped(&gens, 24).unwrap().len(), 24);
    }
}
