//! Exact-rational topology of Fujiki orbifolds: Betti numbers, Euler
//! characteristic, Chern numbers, the rationality test on `C(c₂)` and the
//! Fujiki-constant bookkeeping used for the higher-dimensional series.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fixedpoints::{fixed_surface_orbit_count, FujikiInput};
use crate::singularities::SingularityProfile;

/// Exact rational number; prints as `p/q`, or `p` when `q = 1`.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("a12 = {0} ≠ 0: no Betti/Chern formula covers this singularity type")]
    NonzeroA12(u64),
    #[error("even root of a negative number")]
    NegativeEvenRoot,
    #[error("root index must be at least 2, got {0}")]
    BadRootIndex(u32),
    #[error("n must be at least 2, got {0}")]
    BadN(u32),
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// b₂: `rank + #(F/G)` for n = 2, `rank + 1` for n ≥ 3.
pub fn betti2(input: &FujikiInput, xiao_rank: u64) -> u64 {
    if input.n() == 2 {
        xiao_rank + fixed_surface_orbit_count(input) as u64
    } else {
        xiao_rank + 1
    }
}

/// `s = −(a₂ + 2a₃ + 3a₄ + 5a₆ + 7a₈ + 4𝔟₄ + 5𝔟₆)`.
pub fn s_value(p: &SingularityProfile) -> Result<i64, InvariantError> {
    if p.a12 != 0 {
        return Err(InvariantError::NonzeroA12(p.a12));
    }
    Ok(-((p.a2 + 2 * p.a3 + 3 * p.a4 + 5 * p.a6 + 7 * p.a8 + 4 * p.b4 + 5 * p.b6) as i64))
}

/// `(s, b₄, χ)` assuming `b₃ = 0`.
pub fn s_and_chi(p: &SingularityProfile, b2: i64) -> Result<(i64, i64, i64), InvariantError> {
    s_and_chi_with_b3(p, b2, 0)
}

/// `(s, b₄, χ)` with `b₄ + b₃ − 10b₂ = 46 + s` and `χ = 2 + 2b₂ − 2b₃ + b₄`.
pub fn s_and_chi_with_b3(
    p: &SingularityProfile,
    b2: i64,
    b3: i64,
) -> Result<(i64, i64, i64), InvariantError> {
    let s = s_value(p)?;
    let b4 = 46 + 10 * b2 + s - b3;
    let chi = 2 + 2 * b2 - 2 * b3 + b4;
    Ok((s, b4, chi))
}

/// The local correction `S₀ = Σ` (per-type constant × count).
pub fn s0_value(p: &SingularityProfile) -> Result<Rational, InvariantError> {
    if p.a12 != 0 {
        return Err(InvariantError::NonzeroA12(p.a12));
    }
    let terms = [
        (p.a2, rat(1, 32)),
        (p.a3, rat(2, 27)),
        (p.a4, rat(9, 64)),
        (p.a6, rat(329, 864)),
        (p.a8, rat(41, 128)),
        (p.b4, rat(25, 128)),
        (p.b6, rat(545, 1728)),
    ];
    Ok(terms
        .into_iter()
        .fold(Rational::zero(), |acc, (n, c)| acc + c * int(n as i64)))
}

/// `(c₄, c₂², S₀)`.
pub fn chern_numbers(
    p: &SingularityProfile,
    chi: i64,
) -> Result<(Rational, Rational, Rational), InvariantError> {
    if p.a12 != 0 {
        return Err(InvariantError::NonzeroA12(p.a12));
    }
    let corrections = [
        (p.a2, rat(1, 2)),
        (p.a3, rat(2, 3)),
        (p.a4, rat(3, 4)),
        (p.a6, rat(5, 6)),
        (p.a8, rat(7, 8)),
        (p.b4, rat(7, 8)),
        (p.b6, rat(11, 12)),
    ];
    let c4 = corrections
        .into_iter()
        .fold(int(chi), |acc, (n, c)| acc - c * int(n as i64));
    let s0 = s0_value(p)?;
    let c2sq = int(720) - int(240) * &s0 + &c4 / int(3);
    Ok((c4, c2sq, s0))
}

/// Exact integer k-th root of a nonnegative integer, if it exists.
fn exact_int_root(x: &BigInt, k: u32) -> Option<BigInt> {
    let r = x.nth_root(k);
    (num::pow(r.clone(), k as usize) == *x).then_some(r)
}

/// The k-th root of `x` in ℚ, if it exists.
pub fn rational_root(x: &Rational, k: u32) -> Result<Option<Rational>, InvariantError> {
    if k < 2 {
        return Err(InvariantError::BadRootIndex(k));
    }
    if x.is_negative() {
        if k.is_multiple_of(2) {
            return Err(InvariantError::NegativeEvenRoot);
        }
        return Ok(rational_root(&-x, k)?.map(|r| -r));
    }
    let num = exact_int_root(x.numer(), k);
    let den = exact_int_root(x.denom(), k);
    Ok(match (num, den) {
        (Some(n), Some(d)) => Some(Rational::new(n, d)),
        _ => None,
    })
}

/// Squarefree part of a positive integer, by trial division.
pub fn squarefree_part_int(x: &BigInt) -> BigInt {
    let mut rest = x.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out * rest
}

/// Squarefree part `d` of a positive rational `p/q`: `√(p/q) ∈ ℚ·√d`.
pub fn squarefree_part(x: &Rational) -> BigInt {
    squarefree_part_int(&(x.numer() * x.denom()))
}

/// Outcome of the rationality test on `C(c₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verification {
    /// `C(c₂)` is this rational number.
    Rational(#[serde(serialize_with = "ser_rational")] Rational),
    /// `C(c₂) = coefficient·√squarefree` is irrational.
    Irrational {
        #[serde(serialize_with = "ser_rational")]
        radicand: Rational,
        #[serde(serialize_with = "ser_rational")]
        coefficient: Rational,
        #[serde(serialize_with = "ser_bigint")]
        squarefree: BigInt,
    },
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_bigint<S: serde::Serializer>(r: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl Verification {
    /// Square-root classification of a nonnegative radicand.
    pub fn of_radicand(radicand: Rational) -> Result<Self, InvariantError> {
        if let Some(r) = rational_root(&radicand, 2)? {
            return Ok(Verification::Rational(r));
        }
        let d = squarefree_part(&radicand);
        // √(p/q) = √(pq)/q and pq = m²d.
        let pq = radicand.numer() * radicand.denom();
        let m = (pq / &d).sqrt();
        let coefficient = Rational::new(m, radicand.denom().clone());
        Ok(Verification::Irrational {
            radicand,
            coefficient,
            squarefree: d,
        })
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Verification::Rational(_))
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            Verification::Rational(r) => Some(r),
            Verification::Irrational { .. } => None,
        }
    }

    pub fn squarefree(&self) -> Option<&BigInt> {
        match self {
            Verification::Rational(_) => None,
            Verification::Irrational { squarefree, .. } => Some(squarefree),
        }
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verification::Rational(r) => write!(f, "{r}"),
            Verification::Irrational { squarefree, .. } => {
                write!(f, "IRRATIONAL(squarefree={squarefree})")
            }
        }
    }
}

/// The radicand `C_X·(7c₂² − 4c₄)/15` for a Fujiki-constant factor `C_X`.
pub fn verification_radicand(c_x: &Rational, c4: &Rational, c2sq: &Rational) -> Rational {
    c_x * (int(7) * c2sq - int(4) * c4) / int(15)
}

/// `C(c₂) = √(|G|(7c₂² − 4c₄)/5)` for `S(G)θ^[2]` (there `C_X = 3|G|` up to squares).
pub fn verification_constant(
    order_g: u64,
    c4: &Rational,
    c2sq: &Rational,
) -> Result<Verification, InvariantError> {
    Verification::of_radicand(verification_radicand(&int(3 * order_g as i64), c4, c2sq))
}

/// Coefficient of `(α²)ⁿ` in `ε(α)^{2n}`:
/// `(2n)!·(|G|^{n−1}·(n−1)!)^{2n−1} / (n·2ⁿ)`.
pub fn fujiki_coefficient(order_g: u64, n: u32) -> Result<Rational, InvariantError> {
    if n < 2 {
        return Err(InvariantError::BadN(n));
    }
    let fact = |k: u32| -> BigInt { (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)) };
    let base = num::pow(BigInt::from(order_g), (n - 1) as usize) * fact(n - 1);
    Ok(Rational::new(
        fact(2 * n) * num::pow(base, (2 * n - 1) as usize),
        BigInt::from(n) * num::pow(BigInt::from(2), n as usize),
    ))
}

/// `|H|^{2n−1}`, the factor relating Fujiki constants across a quotient by H.
pub fn quotient_multiplier(order_h: u64, n: u32) -> BigInt {
    num::pow(BigInt::from(order_h), (2 * n - 1) as usize)
}

/// All invariants of one orbifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSet {
    pub b2: i64,
    pub b3: i64,
    pub b4: i64,
    pub chi: i64,
    pub s_value: i64,
    pub s0_value: Rational,
    pub c4: Rational,
    pub c2_squared: Rational,
    pub verification: Verification,
}

impl InvariantSet {
    /// `C(c₂)` if rational.
    pub fn cbar_c2(&self) -> Option<&Rational> {
        self.verification.value()
    }
}

/// Invariants from a profile, b₂, b₃ and a Fujiki-constant factor `C_X`.
pub fn invariants_from_data(
    profile: &SingularityProfile,
    b2: i64,
    b3: i64,
    c_x: &Rational,
) -> Result<InvariantSet, InvariantError> {
    let (s, b4, chi) = s_and_chi_with_b3(profile, b2, b3)?;
    let (c4, c2sq, s0) = chern_numbers(profile, chi)?;
    let verification = Verification::of_radicand(verification_radicand(c_x, &c4, &c2sq))?;
    Ok(InvariantSet {
        b2,
        b3,
        b4,
        chi,
        s_value: s,
        s0_value: s0,
        c4,
        c2_squared: c2sq,
        verification,
    })
}

/// Invariants of `S(G)θ^[2]` from its profile and b₂.
pub fn compute_invariants(
    order_g: u64,
    profile: &SingularityProfile,
    b2: i64,
) -> Result<InvariantSet, InvariantError> {
    invariants_from_data(profile, b2, 0, &int(3 * order_g as i64))
}

/// One series `S(H)^[n]`, n ≥ 3, with its invariant-lattice rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesEntry {
    pub name: String,
    pub order: u64,
    pub xiao_rank: u64,
}

/// Distinctness certificate for two series with equal b₂.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesPair {
    pub first: String,
    pub second: String,
    pub b2: u64,
    /// `|H₁|/|H₂|` as `p/q`.
    pub ratio: String,
    /// Every n in `3..=max_n` for which the n-th root of the ratio was shown irrational.
    pub irrational_for: Vec<u32>,
    pub distinct: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesRow {
    pub name: String,
    pub order: u64,
    pub b2: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub max_n: u32,
    pub rows: Vec<SeriesRow>,
    pub pairs: Vec<SeriesPair>,
}

/// b₂ of every series (n ≥ 3 branch) and root-irrationality certificates for
/// every pair sharing b₂.
pub fn series_report(series: &[SeriesEntry], max_n: u32) -> Result<SeriesReport, InvariantError> {
    if max_n < 3 {
        return Err(InvariantError::BadN(max_n));
    }
    let rows: Vec<SeriesRow> = series
        .iter()
        .map(|s| SeriesRow {
            name: s.name.clone(),
            order: s.order,
            b2: s.xiao_rank + 1,
        })
        .collect();
    let mut pairs = Vec::new();
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            if a.b2 != b.b2 {
                continue;
            }
            let (lo, hi) = if a.order <= b.order { (a, b) } else { (b, a) };
            let ratio = rat(lo.order as i64, hi.order as i64);
            let mut irrational_for = Vec::new();
            for n in 3..=max_n {
                if rational_root(&ratio, n)?.is_none() {
                    irrational_for.push(n);
                }
            }
            let distinct = irrational_for.len() == (max_n - 2) as usize;
            pairs.push(SeriesPair {
                first: lo.name.clone(),
                second: hi.name.clone(),
                b2: a.b2,
                ratio: ratio.to_string(),
                irrational_for,
                distinct,
            });
        }
    }
    Ok(SeriesReport { max_n, rows, pairs })
}

/// Decimal rendering for values whose denominator is 2 (e.g. `130.5`); other
/// values keep the `p/q` form.
pub fn render_half_as_decimal(r: &Rational) -> String {
    if r.denom() == &BigInt::from(2) {
        let twice = (r * int(2)).to_integer();
        let whole: BigInt = &twice / BigInt::from(2);
        let sign = if twice.is_negative() && whole.is_zero() {
            "-"
        } else {
            ""
        };
        format!("{sign}{whole}.5")
    } else if r.denom() == &BigInt::from(4) && r.numer().to_i64().is_some() {
        // Quarters also print as decimals in the reference tables (e.g. 114.75).
        let v = r.numer().to_i64().unwrap();
        let whole = v.div_euclid(4);
        let frac = ["0", "25", "5", "75"][v.rem_euclid(4) as usize];
        format!("{whole}.{frac}")
    } else {
        r.to_string()
    }
}
