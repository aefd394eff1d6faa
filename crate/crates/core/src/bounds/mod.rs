//! Closed-form values: the Moon–Moser count, the 3-uniform strong-independence
//! bound `g(n)`, the graph table of `g` and `h`, the shifted profile `A(i)`,
//! `f(q, i, A)`, the exponent optimizer, the parity bound and the simple
//! extremal values for special profiles.

mod exact;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use exact::ExactValue;

use crate::hypercore::Profile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("n must be at least {min}, got {n}")]
    NTooSmall { n: usize, min: usize },
    #[error("profile {0} is not a subset of {{0,1,2}}")]
    NotGraphProfile(String),
    #[error("profile {profile} has elements above r={r}")]
    ProfileAboveUniformity { profile: String, r: usize },
    #[error("uniformity must be at least {min}, got {r}")]
    RTooSmall { r: usize, min: usize },
    #[error("value too large to represent exactly ({0})")]
    TooLarge(String),
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("{0}")]
    CasePrecondition(String),
}

/// Largest number of maximal independent sets in an `n`-vertex graph:
/// `3^(n/3)`, `4·3^(⌊n/3⌋-1)` or `2·3^⌊n/3⌋` according to `n mod 3`.
///
/// The formula is evaluated literally, so `n = 1` gives `4/3`.
pub fn moon_moser(n: usize) -> Result<ExactValue, BoundsError> {
    if n < 1 {
        return Err(BoundsError::NTooSmall { n, min: 1 });
    }
    let k = (n / 3) as i64;
    Ok(match n % 3 {
        0 => ExactValue::scaled_power(1, 3, k),
        1 => ExactValue::scaled_power(4, 3, k - 1),
        _ => ExactValue::scaled_power(2, 3, k),
    })
}

/// Upper bound on the number of maximal strongly independent sets in a
/// 3-uniform `n`-vertex hypergraph: `3^(n/3)`, `4·3^((n-4)/3)` or
/// `16·3^((n-8)/3)` by `n mod 3`. Non-integral for small `n ≡ 1, 2`.
pub fn g_thm1(n: usize) -> ExactValue {
    let n = n as i64;
    match n % 3 {
        0 => ExactValue::scaled_power(1, 3, n / 3),
        1 => ExactValue::scaled_power(4, 3, (n - 4) / 3),
        _ => ExactValue::scaled_power(16, 3, (n - 8) / 3),
    }
}

/// Row of the graph table: `g` counts all transversals over graphs without
/// isolated vertices, `h` counts maximal transversals over all graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Row {
    G,
    H,
}

impl FromStr for Row {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "g" => Ok(Row::G),
            "h" => Ok(Row::H),
            _ => Err(format!("unknown row {s:?} (expected g|h)")),
        }
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Row::G => "g",
            Row::H => "h",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Table1Cell {
    Value(ExactValue),
    /// No host exists, e.g. a graph on one vertex without isolated vertices.
    Undefined,
}

impl Table1Cell {
    pub fn value(&self) -> Option<&ExactValue> {
        match self {
            Table1Cell::Value(v) => Some(v),
            Table1Cell::Undefined => None,
        }
    }
}

/// One cell of the table of `g_A^(2)(n)` and `h_A^(2)(n)` for the seven
/// non-empty `A ⊆ {0,1,2}`.
pub fn table1_value(profile: Profile, n: usize, row: Row) -> Result<Table1Cell, BoundsError> {
    if profile.max() > 2 {
        return Err(BoundsError::NotGraphProfile(profile.to_string()));
    }
    match row {
        Row::G if n < 2 => return Ok(Table1Cell::Undefined),
        Row::H if n < 1 => return Ok(Table1Cell::Undefined),
        _ => {}
    }
    let half = ExactValue::pow2((n / 2) as u64);
    let one = ExactValue::one();
    let star = ExactValue::one() + ExactValue::pow2(n as u64 - 1);
    let value = match (row, profile.mask()) {
        (_, 0b001) | (_, 0b100) => one,
        (_, 0b010) => half,
        (Row::G, 0b011) | (Row::G, 0b110) => star,
        (Row::G, 0b101) => half,
        (Row::G, 0b111) => ExactValue::pow2(n as u64),
        (Row::H, 0b011) => moon_moser(n)?,
        (Row::H, _) => one,
        _ => unreachable!("mask is a non-empty subset of 0b111"),
    };
    Ok(Table1Cell::Value(value))
}

/// `A(i) = {a - i : a ∈ A, a ≥ i}`, ascending. May be empty.
pub fn a_shift(profile: Profile, i: usize) -> Vec<usize> {
    profile.elements().filter(|&a| a >= i).map(|a| a - i).collect()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j as u128 + 1))
}

/// `f(q, i, A) = Σ_{b ∈ A(i)} C(q, b)`: the number of ways to pick the part of
/// a transversal inside a `q`-block when `i` vertices of its edge are already
/// chosen outside the block.
///
/// Panics if `q > 120`.
pub fn f_value(q: usize, i: usize, profile: Profile) -> u128 {
    assert!(q <= 120, "f_value supports q <= 120");
    a_shift(profile, i).into_iter().map(|b| binomial(q, b)).sum()
}

/// The pair `(p, i)` maximizing `f(p, i, A)^(1/p)` over `1 ≤ p ≤ r`, `0 ≤ i ≤ r - p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExponentChoice {
    pub p: usize,
    pub i: usize,
    /// `f(p, i, A)`.
    pub f: u128,
    /// `f^(1/p)`, for display only; comparisons use exact integer powers.
    pub base: f64,
}

/// `f1^(1/q1)` versus `f2^(1/q2)`, decided by `f1^q2` versus `f2^q1`.
pub fn compare_roots(f1: u128, q1: usize, f2: u128, q2: usize) -> std::cmp::Ordering {
    let lhs = BigUint::from(f1).pow(q2 as u32);
    let rhs = BigUint::from(f2).pow(q1 as u32);
    lhs.cmp(&rhs)
}

/// Scans every admissible `(q, i)` and keeps the best; ties go to the smaller
/// `q`, then the smaller `i`.
pub fn best_exponent(profile: Profile, r: usize) -> Result<ExponentChoice, BoundsError> {
    if r < 1 {
        return Err(BoundsError::RTooSmall { r, min: 1 });
    }
    if profile.max() > r {
        return Err(BoundsError::ProfileAboveUniformity { profile: profile.to_string(), r });
    }
    let mut best: Option<(usize, usize, u128)> = None;
    for q in 1..=r {
        for i in 0..=r - q {
            let f = f_value(q, i, profile);
            let better = match best {
                None => true,
                Some((bq, _, bf)) => compare_roots(f, q, bf, bq).is_gt(),
            };
            if better {
                best = Some((q, i, f));
            }
        }
    }
    let (p, i, f) = best.expect("r >= 1 gives at least one candidate");
    Ok(ExponentChoice { p, i, f, base: (f as f64).powf(1.0 / p as f64) })
}

/// `2^⌊(r-1)n/r⌋`, the maximum number of even (or odd) transversals.
pub fn parity_bound(r: usize, n: usize) -> Result<u128, BoundsError> {
    if r < 2 {
        return Err(BoundsError::RTooSmall { r, min: 2 });
    }
    if n < r {
        return Err(BoundsError::NTooSmall { n, min: r });
    }
    let exp = (r - 1) * n / r;
    if exp >= 128 {
        return Err(BoundsError::TooLarge(format!("2^{exp}")));
    }
    Ok(1u128 << exp)
}

/// The seven simple statements about special profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Prop1Case {
    I,
    Ii,
    Iii,
    Iv,
    V,
    Vi,
    Vii,
}

impl Prop1Case {
    pub const ALL: [Prop1Case; 7] = [
        Prop1Case::I,
        Prop1Case::Ii,
        Prop1Case::Iii,
        Prop1Case::Iv,
        Prop1Case::V,
        Prop1Case::Vi,
        Prop1Case::Vii,
    ];
}

impl FromStr for Prop1Case {
    type Err = BoundsError;
    fn from_str(s: &str) -> Result<Self, BoundsError> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "i" => Prop1Case::I,
            "ii" => Prop1Case::Ii,
            "iii" => Prop1Case::Iii,
            "iv" => Prop1Case::Iv,
            "v" => Prop1Case::V,
            "vi" => Prop1Case::Vi,
            "vii" => Prop1Case::Vii,
            _ => return Err(BoundsError::UnknownCase(s.to_string())),
        })
    }
}

impl fmt::Display for Prop1Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Prop1Case::I => "i",
            Prop1Case::Ii => "ii",
            Prop1Case::Iii => "iii",
            Prop1Case::Iv => "iv",
            Prop1Case::V => "v",
            Prop1Case::Vi => "vi",
            Prop1Case::Vii => "vii",
        };
        f.write_str(s)
    }
}

/// An identity between extremal functions, checked by measurement rather than
/// given by a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Prop1Relation {
    /// `g_A = g_B` with `B = {r - a : a ∈ A}`.
    ComplementDuality,
    /// `g_{a} = h_{a}` for `n ≥ r`.
    SingletonGEqualsH,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Prop1Claim {
    /// Which function the value is for, and the value.
    Value { function: String, value: ExactValue },
    Relation(Prop1Relation),
}

pub fn prop1_value(case: Prop1Case, r: usize, n: usize) -> Result<Prop1Claim, BoundsError> {
    if r < 1 {
        return Err(BoundsError::RTooSmall { r, min: 1 });
    }
    let value = |function: &str, value: ExactValue| {
        Ok(Prop1Claim::Value { function: function.to_string(), value })
    };
    match case {
        Prop1Case::I => value("g_{0} = h_{0}", ExactValue::one()),
        Prop1Case::Ii => value("h_A (r in A)", ExactValue::one()),
        Prop1Case::Iii => value("g_{r}", ExactValue::one()),
        Prop1Case::Iv => value("g_{0..r}", ExactValue::pow2(n as u64)),
        Prop1Case::V => {
            if n < r {
                return Err(BoundsError::NTooSmall { n, min: r });
            }
            value("g_{0,r}", ExactValue::pow2((n / r) as u64))
        }
        Prop1Case::Vi => Ok(Prop1Claim::Relation(Prop1Relation::ComplementDuality)),
        Prop1Case::Vii => {
            if n < r {
                return Err(BoundsError::NTooSmall { n, min: r });
            }
            Ok(Prop1Claim::Relation(Prop1Relation::SingletonGEqualsH))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Profile {
        Profile::new(v.iter().copied()).unwrap()
    }

    fn int(v: u64) -> ExactValue {
        ExactValue::from(v)
    }

    #[test]
    fn moon_moser_values() {
        let got: Vec<_> = [3, 4, 5, 6].iter().map(|&n| moon_moser(n).unwrap()).collect();
        assert_eq!(got, vec![int(3), int(4), int(6), int(9)]);
        assert_eq!(moon_moser(1).unwrap(), ExactValue::ratio(4, 3));
        assert!(moon_moser(0).is_err());
    }

    #[test]
    fn g_values() {
        for (n, v) in [(6, 9), (9, 27), (7, 12), (10, 36), (8, 16), (0, 1), (3, 3), (4, 4)] {
            assert_eq!(g_thm1(n), int(v), "n={n}");
        }
        assert_eq!(g_thm1(5), ExactValue::ratio(16, 3));
        assert_eq!(g_thm1(2), ExactValue::ratio(16, 9));
        assert_eq!(g_thm1(1), ExactValue::ratio(4, 3));
    }

    #[test]
    fn g_triples_every_three_steps() {
        for n in 3..=60 {
            assert_eq!(g_thm1(n), 3 * &g_thm1(n - 3), "n={n}");
        }
    }

    #[test]
    fn g_and_moon_moser_by_residue() {
        for n in 3..=60 {
            let (g, mm) = (g_thm1(n), moon_moser(n).unwrap());
            match n % 3 {
                0 | 1 => assert_eq!(g, mm),
                _ => {
                    let k = (n / 3) as i64;
                    assert_eq!(mm, ExactValue::scaled_power(2, 3, k));
                    assert_eq!(g, ExactValue::scaled_power(16, 3, (n as i64 - 8) / 3));
                    assert_ne!(g, mm);
                }
            }
        }
    }

    #[test]
    fn table_cells() {
        let cell = |a: &[usize], n, row| table1_value(p(a), n, row).unwrap();
        assert_eq!(cell(&[1], 6, Row::G), Table1Cell::Value(int(8)));
        assert_eq!(cell(&[0, 1], 5, Row::G), Table1Cell::Value(int(17)));
        assert_eq!(cell(&[0, 2], 7, Row::H), Table1Cell::Value(int(1)));
        assert_eq!(cell(&[0, 1], 6, Row::H), Table1Cell::Value(int(9)));
        assert_eq!(cell(&[0, 1, 2], 4, Row::G), Table1Cell::Value(int(16)));
        assert_eq!(cell(&[0, 1], 1, Row::G), Table1Cell::Undefined);
        assert!(table1_value(p(&[3]), 4, Row::G).is_err());
    }

    #[test]
    fn shifted_profiles() {
        assert_eq!(a_shift(p(&[0, 1]), 0), vec![0, 1]);
        assert_eq!(a_shift(p(&[0, 1]), 1), vec![0]);
        assert_eq!(a_shift(p(&[0, 3]), 2), vec![1]);
        assert!(a_shift(p(&[0, 1]), 2).is_empty());
    }

    #[test]
    fn f_values() {
        assert_eq!(f_value(3, 0, p(&[0, 1])), 4);
        assert_eq!(f_value(2, 0, p(&[0, 1])), 3);
        assert_eq!(f_value(2, 1, p(&[0, 1])), 1);
        assert_eq!(f_value(1, 0, p(&[3])), 0);
        assert_eq!(f_value(64, 0, Profile::all(63)), (1u128 << 64) - 1);
    }

    #[test]
    fn binomials_match_pascal() {
        let mut row = vec![1u128];
        for n in 0..=100usize {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(binomial(n, k), c, "C({n},{k})");
            }
            let mut next = vec![1u128; n + 2];
            for k in 1..=n {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
        }
    }

    /// Brute-force argmax in f64 over the same grid; tolerance only used to
    /// flag ties, which the exact comparison then decides.
    fn scan_argmax(profile: Profile, r: usize) -> (usize, usize, u128) {
        let mut cands = Vec::new();
        for q in 1..=r {
            for i in 0..=r - q {
                let f = f_value(q, i, profile);
                cands.push((q, i, f, (f as f64).powf(1.0 / q as f64)));
            }
        }
        let top = cands.iter().map(|c| c.3).fold(f64::MIN, f64::max);
        let c = cands.iter().find(|c| (c.3 - top).abs() < 1e-12).unwrap();
        (c.0, c.1, c.2)
    }

    #[test]
    fn best_exponent_examples() {
        let e = best_exponent(p(&[1]), 2).unwrap();
        assert_eq!((e.p, e.i, e.f), (2, 0, 2));
        assert!((e.base - 2f64.sqrt()).abs() < 1e-12);

        // q = 1 already gives base 2, above sqrt(3) at q = 2 and 4^(1/3) at q = 3.
        let e = best_exponent(p(&[0, 1]), 3).unwrap();
        assert_eq!((e.p, e.i, e.f), (1, 0, 2));

        let e = best_exponent(p(&[0, 3]), 3).unwrap();
        assert_eq!((e.p, e.i, e.f), (3, 0, 2));

        // Tie between q = 1 (f = 2) and q = 2 (f = 4) goes to the smaller q.
        let e = best_exponent(Profile::all(3), 3).unwrap();
        assert_eq!((e.p, e.i, e.f), (1, 0, 2));

        assert!(best_exponent(p(&[4]), 3).is_err());
    }

    #[test]
    fn best_exponent_matches_float_scan() {
        for r in 1..=6 {
            for mask in 1u64..1 << (r + 1) {
                let profile = Profile::from_mask(mask).unwrap();
                let e = best_exponent(profile, r).unwrap();
                assert_eq!((e.p, e.i, e.f), scan_argmax(profile, r), "A={profile} r={r}");
                assert!(e.f >= 1);
            }
        }
    }

    #[test]
    fn chosen_exponent_dominates_every_block_size() {
        for r in 1..=7 {
            for mask in 1u64..1 << (r + 1) {
                let profile = Profile::from_mask(mask).unwrap();
                let e = best_exponent(profile, r).unwrap();
                for q in 1..=r {
                    for i in 0..=r - q {
                        let f = f_value(q, i, profile);
                        assert!(compare_roots(f, q, e.f, e.p).is_le(), "A={profile} r={r} q={q} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn parity_values() {
        assert_eq!(parity_bound(3, 6).unwrap(), 16);
        assert_eq!(parity_bound(3, 5).unwrap(), 8);
        assert_eq!(parity_bound(2, 4).unwrap(), 4);
        assert!(parity_bound(3, 2).is_err());
        assert!(parity_bound(1, 4).is_err());
        for n in 2..=20 {
            let g = table1_value(p(&[0, 2]), n, Row::G).unwrap();
            assert_eq!(g.value().unwrap(), &ExactValue::from(parity_bound(2, n).unwrap()));
        }
    }

    #[test]
    fn prop1_values() {
        let v = |c, r, n| match prop1_value(c, r, n).unwrap() {
            Prop1Claim::Value { value, .. } => value,
            other => panic!("{other:?}"),
        };
        assert_eq!(v(Prop1Case::I, 3, 5), int(1));
        assert_eq!(v(Prop1Case::Iv, 3, 5), int(32));
        assert_eq!(v(Prop1Case::V, 3, 7), int(4));
        assert!(prop1_value(Prop1Case::V, 3, 2).is_err());
        assert!(prop1_value(Prop1Case::Vii, 3, 2).is_err());
        assert_eq!(
            prop1_value(Prop1Case::Vi, 3, 2).unwrap(),
            Prop1Claim::Relation(Prop1Relation::ComplementDuality)
        );
        assert_eq!("VII".parse::<Prop1Case>().unwrap(), Prop1Case::Vii);
        assert!("viii".parse::<Prop1Case>().is_err());
    }
}
