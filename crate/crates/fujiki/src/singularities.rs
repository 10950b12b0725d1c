//! Closed-form census of the isolated terminal quotient singularities of
//! `S(G)θ^[2]`, computed from translate-set statistics.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fixedpoints::{
    build_translate_set, cyclic_overgroup_generators, specific_fixed_count,
    square_roots_of_order_six, CosetLabel, FixedPointError, FujikiInput, TranslateSet,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SingularityError {
    #[error("group is not admissible: {0}")]
    Inadmissible(String),
    #[error("count {field} = {numerator}/{denominator} is not an integer")]
    NonIntegral {
        field: &'static str,
        numerator: i64,
        denominator: i64,
    },
    #[error("count {field} is negative")]
    Negative { field: &'static str },
    #[error("an element lies in cyclic subgroups of order 4 and 6 at once")]
    OverlappingCyclicSubgroups,
    #[error(transparent)]
    FixedPoints(#[from] FixedPointError),
}

/// Counts of isolated singularities by analytic type.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct SingularityProfile {
    pub a2: u64,
    pub a3: u64,
    pub a4: u64,
    pub a6: u64,
    pub a8: u64,
    pub a12: u64,
    pub b4: u64,
    pub b6: u64,
}

impl SingularityProfile {
    pub const FIELDS: [&'static str; 8] = ["a2", "a3", "a4", "a6", "a8", "a12", "b4", "b6"];

    /// The ordered tuple `[a2, a3, a4, a6, a8, a12, b4, b6]`.
    pub fn to_array(&self) -> [u64; 8] {
        [
            self.a2, self.a3, self.a4, self.a6, self.a8, self.a12, self.b4, self.b6,
        ]
    }

    pub fn from_array(v: [u64; 8]) -> Self {
        SingularityProfile {
            a2: v[0],
            a3: v[1],
            a4: v[2],
            a6: v[3],
            a8: v[4],
            a12: v[5],
            b4: v[6],
            b6: v[7],
        }
    }

    /// The 7-slot form `[a2, a3, a4, a6, a8, b4, b6]` without `a12`.
    pub fn without_a12(&self) -> [u64; 7] {
        [
            self.a2, self.a3, self.a4, self.a6, self.a8, self.b4, self.b6,
        ]
    }

    pub fn is_empty(&self) -> bool {
        self.to_array().iter().all(|&x| x == 0)
    }

    /// Parses `a2=45,a4=2` style lists; `b4sing`/`b6sing` are accepted as aliases.
    pub fn parse_assignments(text: &str) -> Result<Self, String> {
        let mut v = [0u64; 8];
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
            let key = match key.trim() {
                "b4sing" => "b4",
                "b6sing" => "b6",
                k => k,
            };
            let slot = Self::FIELDS
                .iter()
                .position(|&f| f == key)
                .ok_or_else(|| format!("unknown singularity type `{key}`"))?;
            v[slot] = value
                .trim()
                .parse()
                .map_err(|_| format!("`{value}` is not a nonnegative integer"))?;
        }
        Ok(Self::from_array(v))
    }
}

impl fmt::Display for SingularityProfile {
    /// Nonzero entries, e.g. `a2=10, a4=6, b4sing=1`; an empty profile prints `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Self::FIELDS
            .iter()
            .zip(self.to_array())
            .filter(|(_, v)| *v != 0)
            .map(|(k, v)| match *k {
                // Distinguish the singularity counts from the Betti numbers b₄, b₆.
                "b4" | "b6" => format!("{k}sing={v}"),
                _ => format!("{k}={v}"),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// Which member of each `{g, g⁻¹}` pair serves as representative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RepresentativeChoice {
    /// Canonically least member.
    #[default]
    Least,
    /// Its inverse.
    Inverse,
}

/// Accumulator in units of `1/(2|G|)`.
#[derive(Default)]
struct Sums {
    v: [i64; 8],
}

const A2: usize = 0;
const A3: usize = 1;
const A4: usize = 2;
const A6: usize = 3;
const A8: usize = 4;
const A12: usize = 5;
const B4: usize = 6;
const B6: usize = 7;

impl Sums {
    /// Adds `numerator/|G|·count`.
    fn add(&mut self, slot: usize, numerator: i64, count: i64) {
        self.v[slot] += 2 * numerator * count;
    }
    /// Adds `numerator/(2|G|)·count`.
    fn add_half(&mut self, slot: usize, numerator: i64, count: i64) {
        self.v[slot] += numerator * count;
    }

    fn finish(self, order: usize) -> Result<SingularityProfile, SingularityError> {
        let denominator = 2 * order as i64;
        let mut out = [0u64; 8];
        for (i, &num) in self.v.iter().enumerate() {
            let field = SingularityProfile::FIELDS[i];
            if num % denominator != 0 {
                return Err(SingularityError::NonIntegral {
                    field,
                    numerator: num,
                    denominator,
                });
            }
            out[i] = u64::try_from(num / denominator)
                .map_err(|_| SingularityError::Negative { field })?;
        }
        Ok(SingularityProfile::from_array(out))
    }
}

fn pc_nf(c: &CosetLabel) -> bool {
    c.plus && c.commuting && !c.meets_f
}
fn pnc_nf(c: &CosetLabel) -> bool {
    c.plus && !c.commuting && !c.meets_f
}
fn p_nf(c: &CosetLabel) -> bool {
    c.plus && !c.meets_f
}
fn minus(c: &CosetLabel) -> bool {
    !c.plus
}
fn pc_f(c: &CosetLabel) -> bool {
    c.plus && c.commuting && c.meets_f
}
fn pnc_f(c: &CosetLabel) -> bool {
    c.plus && !c.commuting && c.meets_f
}

fn cnt(ts: &TranslateSet, pred: fn(&CosetLabel) -> bool) -> i64 {
    ts.count(pred) as i64
}

/// Element-order test: every element has order 1, 2, 3, 4 or 6.
pub fn has_admissible_orders(input: &FujikiInput) -> bool {
    let g = input.group();
    (0..g.order()).all(|x| matches!(g.element_order(x), 1 | 2 | 3 | 4 | 6))
}

fn representatives(input: &FujikiInput, k: usize, choice: RepresentativeChoice) -> Vec<usize> {
    let g = input.group();
    let reps = g.elements_of_order(k, true);
    match choice {
        RepresentativeChoice::Least => reps,
        RepresentativeChoice::Inverse => reps.into_iter().map(|x| g.inv(x)).collect(),
    }
}

fn order_pairs(list: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    list.iter().enumerate().flat_map(move |(i, &a)| {
        list.iter()
            .enumerate()
            .filter(move |&(j, _)| j != i)
            .map(move |(_, &b)| (a, b))
    })
}

/// `(a8, a12, b4, b6)`.
pub fn count_rare(input: &FujikiInput) -> Result<(u64, u64, u64, u64), SingularityError> {
    let p = full_profile(input, RepresentativeChoice::Least)?;
    Ok((p.a8, p.a12, p.b4, p.b6))
}

/// `(a4, a6)`.
pub fn count_mid(input: &FujikiInput) -> Result<(u64, u64), SingularityError> {
    let p = full_profile(input, RepresentativeChoice::Least)?;
    Ok((p.a4, p.a6))
}

/// `(a2, a3)`.
pub fn count_common(input: &FujikiInput) -> Result<(u64, u64), SingularityError> {
    let p = full_profile(input, RepresentativeChoice::Least)?;
    Ok((p.a2, p.a3))
}

/// The full census. The element-order test is applied here; the stronger
/// admissibility flag is curated catalog data, checked by callers that have it.
pub fn singularity_profile(input: &FujikiInput) -> Result<SingularityProfile, SingularityError> {
    full_profile(input, RepresentativeChoice::Least)
}

/// The census with an explicit choice of representatives modulo inverse.
pub fn singularity_profile_with(
    input: &FujikiInput,
    choice: RepresentativeChoice,
) -> Result<SingularityProfile, SingularityError> {
    full_profile(input, choice)
}

fn full_profile(
    input: &FujikiInput,
    choice: RepresentativeChoice,
) -> Result<SingularityProfile, SingularityError> {
    if input.n() != 2 {
        return Err(FixedPointError::RequiresDimensionFour(input.n()).into());
    }
    if !has_admissible_orders(input) {
        return Err(SingularityError::Inadmissible(
            "an element has order outside {1, 2, 3, 4, 6}".to_string(),
        ));
    }
    let group = input.group();
    let inverted = choice == RepresentativeChoice::Inverse;
    let mut s = Sums::default();

    for g in representatives(input, 4, choice) {
        let ts = build_translate_set(input, g, g)?;
        let t = ts.t() as i64;
        s.add(A8, 16, cnt(&ts, pc_nf));
        s.add(B4, 16, cnt(&ts, pnc_nf));
        s.add(A4, 8, cnt(&ts, minus) + (4 - t));
        s.add(A2, 64, cnt(&ts, pc_f));
    }

    for g in representatives(input, 6, choice) {
        let ts = build_translate_set(input, g, g)?;
        let t = ts.t() as i64;
        s.add(A12, 12, cnt(&ts, pc_nf));
        s.add(B6, 12, cnt(&ts, pnc_nf));
        s.add(A6, 6, cnt(&ts, minus) + (2 - t));
        s.add(A3, 48, cnt(&ts, pc_f));
        s.add(A2, 12, cnt(&ts, pnc_f));
    }

    for g in representatives(input, 3, choice) {
        let ts = build_translate_set(input, g, g)?;
        let t = ts.t() as i64;
        let roots = square_roots_of_order_six(group, g);
        let k6 = roots.len() as i64;
        let nfix = specific_fixed_count(group, g)? as i64;
        let mut external = nfix * (6 + 2 * k6 - t);
        s.add(A6, 3 * nfix, cnt(&ts, p_nf));
        s.add_half(A3, 3 * nfix, cnt(&ts, minus));
        s.add(A3, 6 * nfix, cnt(&ts, pc_f));
        for (gi, gj) in order_pairs(&roots) {
            let pair = build_translate_set(input, gi, gj)?;
            external += 2 * (2 - pair.t() as i64);
            s.add(A6, 6, cnt(&pair, p_nf));
            s.add(A3, 3, cnt(&pair, minus));
            s.add(A3, 12, cnt(&pair, pc_f));
        }
        s.add_half(A3, 3, external);
    }

    for g in group.elements_of_order(2, false) {
        let ts = build_translate_set(input, g, g)?;
        let t = ts.t() as i64;
        let c6 = cyclic_overgroup_generators(group, g, 6, inverted);
        let c4 = cyclic_overgroup_generators(group, g, 4, inverted);
        if c6.iter().any(|x| c4.contains(x)) {
            return Err(SingularityError::OverlappingCyclicSubgroups);
        }
        let (k6, k4) = (c6.len() as i64, c4.len() as i64);
        let nfix = specific_fixed_count(group, g)? as i64;
        let mut external = nfix * (8 + 2 * k6 + 4 * k4 - t) + 16 * k6 * k4;
        s.add(A4, 2 * nfix, cnt(&ts, p_nf));
        s.add(A2, nfix, cnt(&ts, minus));
        for (gi, gj) in order_pairs(&c6) {
            let pair = build_translate_set(input, gi, gj)?;
            external += 2 * (2 - pair.t() as i64);
            s.add(A4, 4, cnt(&pair, p_nf));
            s.add(A2, 2, cnt(&pair, minus));
        }
        for (hi, hj) in order_pairs(&c4) {
            let pair = build_translate_set(input, hi, hj)?;
            external += 4 * (4 - pair.t() as i64);
            s.add(A4, 8, cnt(&pair, p_nf));
            s.add(A2, 4, cnt(&pair, minus));
        }
        s.add(A2, 1, external);
    }

    s.finish(group.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::inversion_automorphism;
    use crate::permcore::group_from_cycle_strings;
    use std::sync::Arc;

    fn abelian_profile(gens: &[&str], n: usize) -> SingularityProfile {
        let g = Arc::new(group_from_cycle_strings(gens, n).unwrap());
        let input = FujikiInput::new(inversion_automorphism(&g).unwrap(), 2).unwrap();
        singularity_profile(&input).unwrap()
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(abelian_profile(&["(0,1)"], 2).to_string(), "a2=28");
        assert_eq!(abelian_profile(&["(0,1,2)"], 3).to_string(), "a3=15");
        assert_eq!(
            abelian_profile(&["(0,1,2,3)"], 4).to_string(),
            "a2=10, a4=6"
        );
        assert_eq!(
            abelian_profile(&["(0,1,2,3,4,5)"], 6).to_string(),
            "a2=9, a3=6, a6=1"
        );
        assert_eq!(abelian_profile(&["(0,1)", "(2,3)"], 4).to_string(), "a2=36");
    }

    #[test]
    fn parses_assignment_lists() {
        let p = SingularityProfile::parse_assignments("a2=45,a4=2").unwrap();
        assert_eq!(p.to_array(), [45, 0, 2, 0, 0, 0, 0, 0]);
        assert!(SingularityProfile::parse_assignments("a5=1").is_err());
        assert!(SingularityProfile::parse_assignments("a2").is_err());
        assert_eq!(SingularityProfile::default().to_string(), "-");
    }

    #[test]
    fn refuses_inadmissible_orders() {
        let c5 = Arc::new(group_from_cycle_strings(&["(0,1,2,3,4)"], 5).unwrap());
        let input = FujikiInput::new(inversion_automorphism(&c5).unwrap(), 2).unwrap();
        assert!(matches!(
            singularity_profile(&input),
            Err(SingularityError::Inadmissible(_))
        ));
    }
}
