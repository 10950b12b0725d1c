//! Permutation algebra and finite permutation groups.
//!
//! Groups are materialized completely: every element is stored, sorted in the
//! canonical order (lexicographic on the images array), and addressed by its
//! index in that order. All "one representative per class" choices elsewhere
//! in the crate pick the least index, which makes every output deterministic.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use bitvec::prelude::*;
use thiserror::Error;

/// Errors raised by permutation parsing and group construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("malformed cycle notation `{text}`: {reason}")]
    Malformed { text: String, reason: String },
    #[error("point {point} appears more than once in `{text}`")]
    RepeatedPoint { text: String, point: usize },
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("images do not form a bijection of 0..{degree}")]
    NotBijection { degree: usize },
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("degree {0} exceeds the supported maximum of 255 points")]
    DegreeTooLarge(usize),
    #[error("set is not a union of right cosets of the given subgroup")]
    NotUnionOfCosets,
}

/// A bijection of `{0, …, n−1}` stored as its images array.
///
/// The derived ordering is lexicographic on the images, which is the
/// canonical element order used throughout.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= 256, "degree {degree} too large");
        Perm {
            images: (0..degree).map(|i| i as u8).collect(),
        }
    }

    /// Builds a permutation from its images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n > 256 {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijection { degree: n });
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(cycles: &[&[usize]], degree: usize) -> Result<Self, PermError> {
        let text: String = cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        parse_permutation(&text, degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    /// Image of point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ q`: applies `q` first, then `self`.
    pub fn compose(&self, q: &Perm) -> Result<Perm, PermError> {
        self.check_degree(q)?;
        Ok(self.compose_unchecked(q))
    }

    pub(crate) fn compose_unchecked(&self, q: &Perm) -> Perm {
        Perm {
            images: q.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn invert(&self) -> Perm {
        let mut out = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Perm { images: out }
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &Perm) -> Result<Perm, PermError> {
        self.check_degree(h)?;
        Ok(self.conjugate_by_unchecked(h))
    }

    pub(crate) fn conjugate_by_unchecked(&self, h: &Perm) -> Perm {
        // (h g h⁻¹)(h(i)) = h(g(i))
        let mut out = vec![0u8; self.images.len()];
        for (i, &gi) in self.images.iter().enumerate() {
            out[h.images[i] as usize] = h.images[gi as usize];
        }
        Perm { images: out }
    }

    /// Least `k ≥ 1` with `selfᵏ = id` (lcm of the cycle lengths).
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(|c| c.len())
            .fold(1, num::integer::lcm)
    }

    /// Non-trivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle string in the usual listing style, without the `Permutation` prefix.
    /// The identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }

    fn check_degree(&self, other: &Perm) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.cycle_string())
    }
}

/// Parses cycle notation such as `Permutation(7)(0,4)(2,6)` or `(0,1,2)`.
///
/// Points not mentioned are fixed. Singleton cycles like `(7)` are accepted as
/// fixed-point markers, as in published listings. Whitespace is ignored.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Perm, PermError> {
    if degree > 256 {
        return Err(PermError::DegreeTooLarge(degree));
    }
    let malformed = |reason: &str| PermError::Malformed {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let body = compact.strip_prefix("Permutation").unwrap_or(&compact);
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut rest = body;
    while !rest.is_empty() {
        let inner_start = rest
            .strip_prefix('(')
            .ok_or_else(|| malformed("expected `(`"))?;
        let close = inner_start
            .find(')')
            .ok_or_else(|| malformed("unclosed `(`"))?;
        let inner = &inner_start[..close];
        rest = &inner_start[close + 1..];
        if inner.is_empty() {
            continue;
        }
        let mut points = Vec::new();
        for token in inner.split(',') {
            let p: usize = token
                .parse()
                .map_err(|_| malformed(&format!("`{token}` is not a point")))?;
            if p >= degree {
                return Err(PermError::PointOutOfRange { point: p, degree });
            }
            if used[p] {
                return Err(PermError::RepeatedPoint {
                    text: text.to_string(),
                    point: p,
                });
            }
            used[p] = true;
            points.push(p);
        }
        for (k, &p) in points.iter().enumerate() {
            images[p] = points[(k + 1) % points.len()];
        }
    }
    Perm::from_images(&images)
}

/// A set of group elements, addressed by canonical index.
pub type ElementSet = BitVec<u64, Lsb0>;

/// A finite permutation group with all elements materialized.
pub struct GroupTable {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    identity: usize,
    inverse: Vec<usize>,
    element_orders: Vec<usize>,
    table: OnceLock<Vec<u32>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.cycle_string()).collect();
        write!(
            f,
            "GroupTable(order {}, degree {}, generators [{}])",
            self.order(),
            self.degree,
            gens.join(", ")
        )
    }
}

/// Breadth-first closure of the generators under composition.
pub fn close_group(generators: &[Perm]) -> Result<GroupTable, PermError> {
    let first = generators.first().ok_or(PermError::NoGenerators)?;
    let degree = first.degree();
    for g in generators {
        first.check_degree(g)?;
    }
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in generators {
                let y = g.compose_unchecked(x);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort();
    Ok(GroupTable::from_sorted_elements(
        degree,
        generators.to_vec(),
        elements,
    ))
}

/// Parses cycle strings of a common degree and closes them into a group.
pub fn group_from_cycle_strings<S: AsRef<str>>(
    generators: &[S],
    degree: usize,
) -> Result<GroupTable, PermError> {
    let gens = generators
        .iter()
        .map(|s| parse_permutation(s.as_ref(), degree))
        .collect::<Result<Vec<_>, _>>()?;
    close_group(&gens)
}

impl GroupTable {
    fn from_sorted_elements(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let identity = index[&Perm::identity(degree)];
        let inverse = elements.iter().map(|p| index[&p.invert()]).collect();
        let element_orders = elements.iter().map(|p| p.order()).collect();
        GroupTable {
            degree,
            generators,
            elements,
            index,
            identity,
            inverse,
            element_orders,
            table: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Canonical indices of the generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Multiplicative order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        self.element_orders[i]
    }

    /// Index of `element(a) ∘ element(b)`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let table = self.table.get_or_init(|| self.build_table());
        table[a * self.order() + b] as usize
    }

    fn build_table(&self) -> Vec<u32> {
        let n = self.order();
        let mut table = vec![0u32; n * n];
        for (a, pa) in self.elements.iter().enumerate() {
            for (b, pb) in self.elements.iter().enumerate() {
                table[a * n + b] = self.index[&pa.compose_unchecked(pb)] as u32;
            }
        }
        table
    }

    /// Index of `element(h) ∘ element(g) ∘ element(h)⁻¹`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    /// `g^k` for `k ≥ 0`.
    pub fn pow(&self, g: usize, k: usize) -> usize {
        let mut r = self.identity;
        for _ in 0..k {
            r = self.mul(r, g);
        }
        r
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True iff `h` (same degree) normalizes this group.
    pub fn is_normalized_by(&self, h: &Perm) -> bool {
        h.degree() == self.degree
            && self
                .generators
                .iter()
                .all(|g| self.contains(&g.conjugate_by_unchecked(h)))
    }

    /// True iff every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &GroupTable) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// The cyclic subgroup `⟨g⟩` as the list `[id, g, g², …]`.
    pub fn cyclic_subgroup(&self, g: usize) -> Vec<usize> {
        let mut out = vec![self.identity];
        let mut x = g;
        while x != self.identity {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    /// Distinct cyclic subgroups of order `k`, each as a sorted index list,
    /// in canonical order.
    pub fn cyclic_subgroups_of_order(&self, k: usize) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for g in 0..self.order() {
            if self.element_order(g) != k {
                continue;
            }
            let mut sub = self.cyclic_subgroup(g);
            sub.sort_unstable();
            if seen.insert(sub.clone()) {
                found.push(sub);
            }
        }
        found.sort();
        found
    }

    /// Elements of order `k`; with `modulo_inverse`, only the canonically
    /// least member of each pair `{g, g⁻¹}` is kept.
    pub fn elements_of_order(&self, k: usize, modulo_inverse: bool) -> Vec<usize> {
        (0..self.order())
            .filter(|&g| self.element_order(g) == k)
            .filter(|&g| !modulo_inverse || g <= self.inv(g))
            .collect()
    }

    /// One canonical representative per right coset `s·H` contained in `set`.
    ///
    /// Fails when `set` is not a union of such cosets.
    pub fn right_coset_orbits(
        &self,
        set: &[usize],
        subgroup: &[usize],
    ) -> Result<Vec<usize>, PermError> {
        let members: HashSet<usize> = set.iter().copied().collect();
        let mut sorted: Vec<usize> = members.iter().copied().collect();
        sorted.sort_unstable();
        let mut covered: HashSet<usize> = HashSet::new();
        let mut reps = Vec::new();
        for s in sorted {
            if covered.contains(&s) {
                continue;
            }
            for &h in subgroup {
                let x = self.mul(s, h);
                if !members.contains(&x) {
                    return Err(PermError::NotUnionOfCosets);
                }
                covered.insert(x);
            }
            // s is the least member of its coset because all smaller members
            // were covered by earlier cosets.
            reps.push(s);
        }
        Ok(reps)
    }

    /// Subgroup generated by the given elements, as a membership bitset.
    pub fn generated(&self, gens: &[usize]) -> ElementSet {
        let mut set = bitvec![u64, Lsb0; 0; self.order()];
        set.set(self.identity, true);
        let mut frontier = vec![self.identity];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &x in &frontier {
                for &g in gens {
                    let y = self.mul(x, g);
                    if !set[y] {
                        set.set(y, true);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        set
    }

    /// Extends a subgroup (given as bitset) by one more generator.
    pub fn extend_subgroup(&self, sub: &ElementSet, gens: &[usize], extra: usize) -> ElementSet {
        let mut set = sub.clone();
        let mut all_gens = gens.to_vec();
        all_gens.push(extra);
        let mut frontier: Vec<usize> = set.iter_ones().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &x in &frontier {
                for &g in &all_gens {
                    let y = self.mul(x, g);
                    if !set[y] {
                        set.set(y, true);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        set
    }

    /// Every irredundant generating set (basis) with at most `max_size` elements.
    pub fn irredundant_generating_sets(&self, max_size: usize) -> IrredundantSets<'_> {
        IrredundantSets::new(self, max_size)
    }
}

/// Depth-first enumeration of bases in canonical (ascending index) order.
///
/// A basis `B = {b₁ < … < b_k}` never has `b_i ∈ ⟨b₁,…,b_{i−1}⟩`, otherwise
/// `b_i` would be redundant; the search only descends along such chains and
/// checks full irredundancy once the whole group is generated.
pub struct IrredundantSets<'a> {
    group: &'a GroupTable,
    max_size: usize,
    // Each frame: chosen family, its generated subgroup, and the next candidate index.
    stack: Vec<(Vec<usize>, ElementSet, usize)>,
}

impl<'a> IrredundantSets<'a> {
    fn new(group: &'a GroupTable, max_size: usize) -> Self {
        let trivial = group.generated(&[]);
        IrredundantSets {
            group,
            max_size,
            stack: vec![(Vec::new(), trivial, 0)],
        }
    }

    fn is_irredundant(&self, family: &[usize]) -> bool {
        let n = self.group.order();
        (0..family.len()).all(|skip| {
            let rest: Vec<usize> = family
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &x)| x)
                .collect();
            self.group.generated(&rest).count_ones() < n
        })
    }
}

impl Iterator for IrredundantSets<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let n = self.group.order();
        if n == 1 {
            // The trivial group is generated by the empty family.
            if let Some((fam, _, start)) = self.stack.pop() {
                if fam.is_empty() && start == 0 {
                    return Some(Vec::new());
                }
            }
            return None;
        }
        while let Some((family, sub, start)) = self.stack.pop() {
            if family.len() == self.max_size {
                continue;
            }
            let mut candidate = start;
            while candidate < n && (candidate == self.group.identity() || sub[candidate]) {
                candidate += 1;
            }
            if candidate >= n {
                continue;
            }
            // Revisit this frame for later candidates.
            self.stack
                .push((family.clone(), sub.clone(), candidate + 1));
            let mut extended = family;
            let grown = self.group.extend_subgroup(&sub, &extended, candidate);
            extended.push(candidate);
            if grown.count_ones() == n {
                if self.is_irredundant(&extended) {
                    return Some(extended);
                }
            } else {
                self.stack.push((extended, grown, candidate + 1));
            }
        }
        None
    }
}

/// Every permutation of degree `n` with `p² = id` (including the identity),
/// in canonical order.
pub fn symmetric_involutions(n: usize) -> Vec<Perm> {
    fn rec(images: &mut Vec<usize>, free: &mut Vec<bool>, pos: usize, out: &mut Vec<Perm>) {
        let n = images.len();
        let Some(i) = (pos..n).find(|&i| free[i]) else {
            out.push(Perm::from_images(images).expect("involution images are a bijection"));
            return;
        };
        free[i] = false;
        images[i] = i;
        rec(images, free, i + 1, out);
        for j in i + 1..n {
            if free[j] {
                free[j] = false;
                images[i] = j;
                images[j] = i;
                rec(images, free, i + 1, out);
                images[j] = j;
                free[j] = true;
            }
        }
        images[i] = i;
        free[i] = true;
    }
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    let mut free = vec![true; n];
    rec(&mut images, &mut free, 0, &mut out);
    out.sort();
    out
}

/// The full symmetric group of degree `n`, generated by an `n`-cycle and a transposition.
pub fn symmetric_group(n: usize) -> Result<GroupTable, PermError> {
    if n <= 1 {
        return close_group(&[Perm::identity(n.max(1))]);
    }
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    close_group(&[Perm::from_images(&cycle)?, Perm::from_images(&swap)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        parse_permutation(s, n).unwrap()
    }

    #[test]
    fn parses_listing_with_fixed_point_marker() {
        let t = p("Permutation(7)(0,4)(2,6)", 8);
        assert_eq!(t.degree(), 8);
        assert_eq!(t.images().collect::<Vec<_>>(), vec![4, 1, 6, 3, 0, 5, 2, 7]);
    }

    #[test]
    fn parses_three_cycle() {
        let t = p("Permutation(0,1,2)", 3);
        assert_eq!(t.images().collect::<Vec<_>>(), vec![1, 2, 0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_permutation("(0,1)(1,2)", 3),
            Err(PermError::RepeatedPoint { .. })
        ));
        assert!(matches!(
            parse_permutation("(0,5)", 3),
            Err(PermError::PointOutOfRange { .. })
        ));
        assert!(matches!(
            parse_permutation("(0,1", 3),
            Err(PermError::Malformed { .. })
        ));
        assert!(matches!(
            parse_permutation("(a,1)", 3),
            Err(PermError::Malformed { .. })
        ));
    }

    #[test]
    fn basic_operations() {
        assert_eq!(p("(0,1,2)", 3).invert(), p("(0,2,1)", 3));
        assert_eq!(p("(0,1)(2,3,4)", 5).order(), 6);
        assert_eq!(
            p("(0,1)", 3).conjugate_by(&p("(1,2)", 3)).unwrap(),
            p("(0,2)", 3)
        );
        assert!(p("(0,1)", 3).compose(&p("(0,1)", 4)).is_err());
        // q first, then p
        let c = p("(0,1)", 3).compose(&p("(1,2)", 3)).unwrap();
        assert_eq!(c.apply(1), 2);
        assert_eq!(c.apply(2), 0);
    }

    #[test]
    fn identity_prints_and_reparses() {
        let id = Perm::identity(4);
        assert_eq!(id.to_string(), "()");
        assert_eq!(parse_permutation("()", 4).unwrap(), id);
    }

    #[test]
    fn small_closures() {
        let g = group_from_cycle_strings(&["(0,1)"], 2).unwrap();
        assert_eq!(g.order(), 2);
        let c2p2c4 = group_from_cycle_strings(&["(0,1,2,7)(3,4,5,6)", "(0,4)(2,6)"], 8).unwrap();
        assert_eq!(c2p2c4.order(), 16);
    }

    #[test]
    fn cyclic_subgroup_census() {
        let c4 = group_from_cycle_strings(&["(0,1,2,3)"], 4).unwrap();
        assert_eq!(c4.cyclic_subgroups_of_order(4).len(), 1);
        let v4 = group_from_cycle_strings(&["(0,1)", "(2,3)"], 4).unwrap();
        assert_eq!(v4.cyclic_subgroups_of_order(4).len(), 0);
        let c6 = group_from_cycle_strings(&["(0,1,2,3,4,5)"], 6).unwrap();
        assert_eq!(c6.cyclic_subgroups_of_order(6).len(), 1);
    }

    #[test]
    fn elements_of_order_modulo_inverse() {
        let c3 = group_from_cycle_strings(&["(0,1,2)"], 3).unwrap();
        assert_eq!(c3.elements_of_order(3, true).len(), 1);
        assert_eq!(c3.elements_of_order(3, false).len(), 2);
        let c2 = group_from_cycle_strings(&["(0,1)"], 2).unwrap();
        assert_eq!(c2.elements_of_order(2, true).len(), 1);
        let c6 = group_from_cycle_strings(&["(0,1,2,3,4,5)"], 6).unwrap();
        assert_eq!(c6.elements_of_order(6, true).len(), 1);
    }

    #[test]
    fn coset_orbits() {
        let c2 = group_from_cycle_strings(&["(0,1)"], 2).unwrap();
        let all: Vec<usize> = (0..2).collect();
        assert_eq!(c2.right_coset_orbits(&all, &all).unwrap().len(), 1);
        let c3 = group_from_cycle_strings(&["(0,1,2)"], 3).unwrap();
        let g = c3.elements_of_order(3, true)[0];
        let h = c3.cyclic_subgroup(g);
        let all: Vec<usize> = (0..3).collect();
        assert_eq!(c3.right_coset_orbits(&all, &h).unwrap().len(), 1);
        assert_eq!(
            c3.right_coset_orbits(&[c3.identity()], &h),
            Err(PermError::NotUnionOfCosets)
        );
    }

    #[test]
    fn bases_of_small_groups() {
        let c2 = group_from_cycle_strings(&["(0,1)"], 2).unwrap();
        assert_eq!(c2.irredundant_generating_sets(4).count(), 1);
        let v4 = group_from_cycle_strings(&["(0,1)", "(2,3)"], 4).unwrap();
        let bases: Vec<_> = v4.irredundant_generating_sets(4).collect();
        assert_eq!(bases.len(), 3);
        assert!(bases.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn involutions_of_symmetric_groups() {
        // 1 + C(4,2) + 3 = 10 elements of order ≤ 2 in S4
        assert_eq!(symmetric_involutions(4).len(), 10);
        assert_eq!(symmetric_involutions(9).len(), 2620);
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
    }
}
