//! Fixed-point combinatorics of the action of `⟨j_θ(G), 𝔖₂⟩` on `S × S`,
//! expressed purely in terms of the group and the involution.

use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::involutions::{is_valid_involution, same_group, GroupInvolution};
use crate::permcore::{GroupTable, PermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixedPointError {
    #[error("the involution is defined on a different group")]
    GroupMismatch,
    #[error("element order {0} is not one of 2, 3, 4, 6")]
    InadmissibleOrder(usize),
    #[error("negative number of specific fixed points for an element of order {order}: the group is not admissible")]
    NegativeFixedCount { order: usize },
    #[error("elements of orders {0} and {1} cannot be related by the translate set")]
    OrderMismatch(usize, usize),
    #[error("the cyclic groups generated by the two elements intersect trivially")]
    TrivialIntersection,
    #[error("coset count {t} exceeds the fixed-point budget {budget}")]
    BudgetExceeded { t: usize, budget: usize },
    #[error("operation requires n = 2, got n = {0}")]
    RequiresDimensionFour(usize),
    #[error("n must be at least 2, got {0}")]
    InvalidN(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// The data `(G, θ, n)` of a Fujiki variety `S(G)θ^[n]`.
#[derive(Clone, Debug)]
pub struct FujikiInput {
    group: Arc<GroupTable>,
    theta: GroupInvolution,
    n: usize,
}

impl FujikiInput {
    pub fn new(theta: GroupInvolution, n: usize) -> Result<Self, FixedPointError> {
        if n < 2 {
            return Err(FixedPointError::InvalidN(n));
        }
        Ok(FujikiInput {
            group: theta.group().clone(),
            theta,
            n,
        })
    }

    /// Like [`FujikiInput::new`] but checks that θ lives on `group`.
    pub fn with_group(
        group: Arc<GroupTable>,
        theta: GroupInvolution,
        n: usize,
    ) -> Result<Self, FixedPointError> {
        if !same_group(&group, theta.group()) {
            return Err(FixedPointError::GroupMismatch);
        }
        Self::new(theta, n)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn theta(&self) -> &GroupInvolution {
        &self.theta
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// F(θ) = {g : θ(g) = g⁻¹}, as ascending element indices.
pub fn fixed_inversion_set(input: &FujikiInput) -> Vec<usize> {
    input.theta.fixed_inversion_set()
}

/// Number of orbits of F(θ) under `g·h = θ(g)∘h∘g⁻¹`.
pub fn fixed_surface_orbit_count(input: &FujikiInput) -> usize {
    let g = input.group();
    let f = fixed_inversion_set(input);
    let mut seen = vec![false; g.order()];
    let mut orbits = 0;
    for &h in &f {
        if seen[h] {
            continue;
        }
        orbits += 1;
        for x in 0..g.order() {
            let y = g.mul(g.mul(input.theta.apply(x), h), g.inv(x));
            seen[y] = true;
        }
    }
    orbits
}

/// Generators of the cyclic subgroups of order `k` containing `g`, one per
/// subgroup: the canonically least generator, or its inverse when `inverted`.
pub fn cyclic_overgroup_generators(
    group: &GroupTable,
    g: usize,
    k: usize,
    inverted: bool,
) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for sub in group.cyclic_subgroups_of_order(k) {
        if sub.binary_search(&g).is_err() {
            continue;
        }
        let least = *sub
            .iter()
            .find(|&&h| group.element_order(h) == k)
            .expect("cyclic subgroup has a generator");
        out.push(if inverted { group.inv(least) } else { least });
    }
    out
}

/// Generators `h` of the order-6 cyclic subgroups containing the order-3
/// element `g`, normalized by `h² = g`.
pub fn square_roots_of_order_six(group: &GroupTable, g: usize) -> Vec<usize> {
    cyclic_overgroup_generators(group, g, 6, false)
        .into_iter()
        .map(|h| {
            if group.mul(h, h) == g {
                h
            } else {
                group.inv(h)
            }
        })
        .collect()
}

/// `(k₄, k₆)`: numbers of cyclic subgroups of order 4 and 6 containing `g`.
pub fn subgroup_multiplicities(group: &GroupTable, g: usize) -> (usize, usize) {
    (
        cyclic_overgroup_generators(group, g, 4, false).len(),
        cyclic_overgroup_generators(group, g, 6, false).len(),
    )
}

/// Number of points of the K3 surface whose stabilizer is exactly `⟨g⟩`.
pub fn specific_fixed_count(group: &GroupTable, g: usize) -> Result<usize, FixedPointError> {
    let order = group.element_order(g);
    let (k4, k6) = subgroup_multiplicities(group, g);
    let count: i64 = match order {
        2 => 8 - 2 * k6 as i64 - 4 * k4 as i64,
        3 => 6 - 2 * k6 as i64,
        4 => 4,
        6 => 2,
        other => return Err(FixedPointError::InadmissibleOrder(other)),
    };
    usize::try_from(count).map_err(|_| FixedPointError::NegativeFixedCount { order })
}

/// Labels of one right coset `s⟨gᵢ⟩` of a translate set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetLabel {
    /// Canonical representative (least member of the coset).
    pub rep: usize,
    pub plus: bool,
    pub commuting: bool,
    pub meets_f: bool,
}

/// `𝒮_{gᵢ,gⱼ} = {s : s⁻¹ θ(gⱼ) s ∈ {gᵢ, gᵢ⁻¹}}` split into labelled right `⟨gᵢ⟩`-cosets.
#[derive(Clone, Debug)]
pub struct TranslateSet {
    pub gi: usize,
    pub gj: usize,
    /// Canonical generator of `⟨gᵢ⟩ ∩ ⟨gⱼ⟩`.
    pub g: usize,
    pub cosets: Vec<CosetLabel>,
}

impl TranslateSet {
    /// t: the number of cosets.
    pub fn t(&self) -> usize {
        self.cosets.len()
    }

    pub fn count(&self, pred: impl Fn(&CosetLabel) -> bool) -> usize {
        self.cosets.iter().filter(|c| pred(c)).count()
    }
}

/// Precomputed context for labelling members of one translate set.
pub struct TranslateContext<'a> {
    input: &'a FujikiInput,
    gi_cyclic: Vec<usize>,
    intersection: HashSet<usize>,
    g: usize,
    f_cosets: HashSet<usize>,
}

impl<'a> TranslateContext<'a> {
    pub fn new(input: &'a FujikiInput, gi: usize, gj: usize) -> Result<Self, FixedPointError> {
        let group = input.group();
        let (oi, oj) = (group.element_order(gi), group.element_order(gj));
        if oi != oj {
            return Err(FixedPointError::OrderMismatch(oi, oj));
        }
        let gi_cyclic = group.cyclic_subgroup(gi);
        let gj_cyclic: HashSet<usize> = group.cyclic_subgroup(gj).into_iter().collect();
        let mut common: Vec<usize> = gi_cyclic
            .iter()
            .copied()
            .filter(|x| gj_cyclic.contains(x))
            .collect();
        common.sort_unstable();
        if common.len() < 2 {
            return Err(FixedPointError::TrivialIntersection);
        }
        let g = *common
            .iter()
            .find(|&&x| group.element_order(x) == common.len())
            .expect("intersection of cyclic groups is cyclic");
        let f_cosets = fixed_inversion_set(input)
            .into_iter()
            .flat_map(|f| gi_cyclic.iter().map(move |&a| (f, a)))
            .map(|(f, a)| group.mul(f, a))
            .collect();
        Ok(TranslateContext {
            input,
            gi_cyclic,
            intersection: common.into_iter().collect(),
            g,
            f_cosets,
        })
    }

    /// Whether `s` lies in the translate set.
    pub fn contains(&self, s: usize, gj: usize) -> bool {
        let group = self.input.group();
        let gi = self.gi_cyclic[1];
        let x = group.mul(group.mul(group.inv(s), self.input.theta.apply(gj)), s);
        x == gi || x == group.inv(gi)
    }

    /// Labels computed from the member `s` (constant along the coset).
    pub fn label(&self, s: usize) -> CosetLabel {
        let group = self.input.group();
        let theta = &self.input.theta;
        let coset: Vec<usize> = self.gi_cyclic.iter().map(|&a| group.mul(s, a)).collect();
        let plus = coset
            .iter()
            .any(|&sa| self.intersection.contains(&group.mul(theta.apply(sa), sa)));
        let commuting = group.mul(group.mul(s, self.g), group.inv(s)) == theta.apply(self.g);
        let meets_f = self.f_cosets.contains(&s);
        CosetLabel {
            rep: *coset.iter().min().expect("nonempty"),
            plus,
            commuting,
            meets_f,
        }
    }
}

/// Builds `𝒮_{gᵢ,gⱼ}` with its coset labels; `gᵢ = gⱼ` gives `𝒮_g`.
pub fn build_translate_set(
    input: &FujikiInput,
    gi: usize,
    gj: usize,
) -> Result<TranslateSet, FixedPointError> {
    let ctx = TranslateContext::new(input, gi, gj)?;
    let group = input.group();
    let mut covered = vec![false; group.order()];
    let mut cosets = Vec::new();
    for s in 0..group.order() {
        if covered[s] || !ctx.contains(s, gj) {
            continue;
        }
        for &a in &ctx.gi_cyclic {
            covered[group.mul(s, a)] = true;
        }
        cosets.push(ctx.label(s));
    }
    Ok(TranslateSet {
        gi,
        gj,
        g: ctx.g,
        cosets,
    })
}

fn budget(t: usize, budget: usize) -> Result<i64, FixedPointError> {
    if t > budget {
        return Err(FixedPointError::BudgetExceeded { t, budget });
    }
    Ok((budget - t) as i64)
}

/// N(g): specific fixed points of `g` on `S × S` not of the form `(x, s(x))`.
pub fn external_fixed_count(input: &FujikiInput, g: usize) -> Result<i64, FixedPointError> {
    if input.n != 2 {
        return Err(FixedPointError::RequiresDimensionFour(input.n));
    }
    let group = input.group();
    let t = build_translate_set(input, g, g)?.t();
    match group.element_order(g) {
        6 => Ok(2 * budget(t, 2)?),
        4 => Ok(4 * budget(t, 4)?),
        3 => {
            let roots = square_roots_of_order_six(group, g);
            let k6 = roots.len() as i64;
            let nfix = specific_fixed_count(group, g)? as i64;
            let mut total = nfix * (6 + 2 * k6 - t as i64);
            for (i, &a) in roots.iter().enumerate() {
                for (j, &b) in roots.iter().enumerate() {
                    if i != j {
                        total += 2 * budget(build_translate_set(input, a, b)?.t(), 2)?;
                    }
                }
            }
            Ok(total)
        }
        2 => {
            let c6 = cyclic_overgroup_generators(group, g, 6, false);
            let c4 = cyclic_overgroup_generators(group, g, 4, false);
            let (k6, k4) = (c6.len() as i64, c4.len() as i64);
            let nfix = specific_fixed_count(group, g)? as i64;
            let mut total = nfix * (8 + 2 * k6 + 4 * k4 - t as i64) + 16 * k6 * k4;
            for (list, weight, cap) in [(&c6, 2, 2), (&c4, 4, 4)] {
                for (i, &a) in list.iter().enumerate() {
                    for (j, &b) in list.iter().enumerate() {
                        if i != j {
                            total += weight * budget(build_translate_set(input, a, b)?.t(), cap)?;
                        }
                    }
                }
            }
            Ok(total)
        }
        other => Err(FixedPointError::InadmissibleOrder(other)),
    }
}

/// An element `(σ, (a, b))` of `G² ⋊ 𝔖₂` acting on `S × S`:
/// `(x, y) ↦ (a x, b y)` without swap, `(x, y) ↦ (a y, b x)` with swap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub swap: bool,
    pub a: usize,
    pub b: usize,
}

impl WreathElement {
    /// `self ∘ other` (other applied first).
    pub fn compose(&self, other: &WreathElement, group: &GroupTable) -> WreathElement {
        let (a, b) = if self.swap {
            (group.mul(self.a, other.b), group.mul(self.b, other.a))
        } else {
            (group.mul(self.a, other.a), group.mul(self.b, other.b))
        };
        WreathElement {
            swap: self.swap ^ other.swap,
            a,
            b,
        }
    }

    /// `j_θ(g) = (g, θ(g))`.
    pub fn diagonal(input: &FujikiInput, g: usize) -> WreathElement {
        WreathElement {
            swap: false,
            a: g,
            b: input.theta.apply(g),
        }
    }

    /// The factor exchange `s₀`.
    pub fn exchange(group: &GroupTable) -> WreathElement {
        WreathElement {
            swap: true,
            a: group.identity(),
            b: group.identity(),
        }
    }
}

/// Elements of `𝒢 = ⟨j_θ(G), s₀⟩`, built by explicit closure.
pub fn wreath_group(input: &FujikiInput) -> Vec<WreathElement> {
    let group = input.group();
    let mut gens: Vec<WreathElement> = group
        .generator_indices()
        .into_iter()
        .map(|g| WreathElement::diagonal(input, g))
        .collect();
    gens.push(WreathElement::exchange(group));
    let id = WreathElement {
        swap: false,
        a: group.identity(),
        b: group.identity(),
    };
    let mut seen: HashSet<WreathElement> = HashSet::from([id]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = g.compose(x, group);
                if seen.insert(y) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<WreathElement> = seen.into_iter().collect();
    out.sort();
    out
}

/// `|𝒢|` by explicit closure; equals `|G|·2` for n = 2.
pub fn wreath_order_check(input: &FujikiInput) -> usize {
    wreath_group(input).len()
}

/// The commuting label through the wreath model: `j_θ(s⁻¹)∘s₀` commutes with `j_θ(g)`.
pub fn commuting_in_wreath(input: &FujikiInput, s: usize, g: usize) -> bool {
    let group = input.group();
    let x = WreathElement::diagonal(input, group.inv(s))
        .compose(&WreathElement::exchange(group), group);
    let y = WreathElement::diagonal(input, g);
    x.compose(&y, group) == y.compose(&x, group)
}

/// For n ≥ 3 the quotient is primitive iff G is abelian and θ is valid.
pub fn is_primitive_check(input: &FujikiInput) -> bool {
    input.group().is_abelian() && is_valid_involution(&input.theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::inversion_automorphism;
    use crate::permcore::group_from_cycle_strings;

    fn abelian(gens: &[&str], n: usize) -> FujikiInput {
        let g = Arc::new(group_from_cycle_strings(gens, n).unwrap());
        FujikiInput::new(inversion_automorphism(&g).unwrap(), 2).unwrap()
    }

    #[test]
    fn involution_of_c2() {
        let input = abelian(&["(0,1)"], 2);
        let g = input.group().elements_of_order(2, true)[0];
        assert_eq!(specific_fixed_count(input.group(), g).unwrap(), 8);
        let ts = build_translate_set(&input, g, g).unwrap();
        assert_eq!(ts.t(), 1);
        assert_eq!(
            (
                ts.cosets[0].plus,
                ts.cosets[0].commuting,
                ts.cosets[0].meets_f
            ),
            (true, true, true)
        );
        assert_eq!(external_fixed_count(&input, g).unwrap(), 56);
        assert_eq!(fixed_surface_orbit_count(&input), 2);
        assert_eq!(wreath_order_check(&input), 4);
    }

    #[test]
    fn order_three_element_of_c3() {
        let input = abelian(&["(0,1,2)"], 3);
        let g = input.group().elements_of_order(3, true)[0];
        let ts = build_translate_set(&input, g, g).unwrap();
        assert!(ts.cosets.iter().all(|c| c.plus && !c.commuting));
        assert_eq!(external_fixed_count(&input, g).unwrap(), 30);
    }

    #[test]
    fn multiplicities() {
        let c4 = abelian(&["(0,1,2,3)"], 4);
        let sq = c4.group().elements_of_order(2, false)[0];
        assert_eq!(subgroup_multiplicities(c4.group(), sq), (1, 0));
        assert_eq!(specific_fixed_count(c4.group(), sq).unwrap(), 4);
        let c6 = abelian(&["(0,1,2,3,4,5)"], 6);
        let t = c6.group().elements_of_order(3, true)[0];
        assert_eq!(subgroup_multiplicities(c6.group(), t).1, 1);
        let h = c6.group().elements_of_order(6, true)[0];
        assert_eq!(specific_fixed_count(c6.group(), h).unwrap(), 2);
        let v4 = abelian(&["(0,1)", "(2,3)"], 4);
        let x = v4.group().elements_of_order(2, true)[0];
        assert_eq!(subgroup_multiplicities(v4.group(), x), (0, 0));
    }

    #[test]
    fn translate_set_errors() {
        let c6 = abelian(&["(0,1,2,3,4,5)"], 6);
        let two = c6.group().elements_of_order(2, true)[0];
        let three = c6.group().elements_of_order(3, true)[0];
        assert_eq!(
            build_translate_set(&c6, two, three).unwrap_err(),
            FixedPointError::OrderMismatch(2, 3)
        );
        let v4 = abelian(&["(0,1)", "(2,3)"], 4);
        let inv = v4.group().elements_of_order(2, false);
        assert_eq!(
            build_translate_set(&v4, inv[0], inv[1]).unwrap_err(),
            FixedPointError::TrivialIntersection
        );
    }

    #[test]
    fn primitivity() {
        let c3 = Arc::new(group_from_cycle_strings(&["(0,1,2)"], 3).unwrap());
        let inv = FujikiInput::new(inversion_automorphism(&c3).unwrap(), 3).unwrap();
        assert!(is_primitive_check(&inv));
        let id = FujikiInput::new(GroupInvolution::identity(c3), 3).unwrap();
        assert!(!is_primitive_check(&id));
        let s3 = Arc::new(group_from_cycle_strings(&["(0,1)", "(0,1,2)"], 3).unwrap());
        let s3id = FujikiInput::new(GroupInvolution::identity(s3), 3).unwrap();
        assert!(!is_primitive_check(&s3id));
    }

    #[test]
    fn fixed_set_of_s3_identity() {
        let s3 = Arc::new(group_from_cycle_strings(&["(0,1)", "(0,1,2)"], 3).unwrap());
        let input = FujikiInput::new(GroupInvolution::identity(s3), 2).unwrap();
        assert_eq!(fixed_inversion_set(&input).len(), 4);
    }
}
