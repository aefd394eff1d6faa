//! Builders for the extremal hypergraphs: matchings, the 3-uniform
//! strong-independence extremal family, stars, the `{0,r}` family, the
//! sunflower construction for general profiles, the parity overlap, and
//! complete hypergraphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{best_exponent, BoundsError};
use crate::hypercore::{Hypergraph, HypergraphError, Profile, VertexSet, MAX_EDGES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{kind} needs n >= {min}, got n={n}")]
    NTooSmall { kind: ConstructionKind, n: usize, min: usize },
    #[error("{kind} needs r >= {min}, got r={r}")]
    RTooSmall { kind: ConstructionKind, r: usize, min: usize },
    #[error("the sunflower construction is undefined for A = {{r}}")]
    SingletonTopProfile,
    #[error("{kind} needs a profile")]
    MissingProfile { kind: ConstructionKind },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    Matching,
    Thm1Extremal,
    Star,
    Prop1v,
    Thm3iSunflower,
    ParityOverlap,
    Complete,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 7] = [
        ConstructionKind::Matching,
        ConstructionKind::Thm1Extremal,
        ConstructionKind::Star,
        ConstructionKind::Prop1v,
        ConstructionKind::Thm3iSunflower,
        ConstructionKind::ParityOverlap,
        ConstructionKind::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::Matching => "matching",
            ConstructionKind::Thm1Extremal => "thm1_extremal",
            ConstructionKind::Star => "star",
            ConstructionKind::Prop1v => "prop1v",
            ConstructionKind::Thm3iSunflower => "thm3i_sunflower",
            ConstructionKind::ParityOverlap => "parity_overlap",
            ConstructionKind::Complete => "complete",
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.replace('-', "_");
        ConstructionKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = ConstructionKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown construction {s:?} (expected one of {})", names.join(", "))
            })
    }
}

/// A construction together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub n: usize,
    pub r: usize,
    pub profile: Option<Profile>,
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Hypergraph, ConstructionError> {
        let (n, r) = (self.n, self.r);
        match self.kind {
            ConstructionKind::Matching => matching(n, r),
            ConstructionKind::Thm1Extremal => thm1_extremal(n),
            ConstructionKind::Star => star(n),
            ConstructionKind::Prop1v => prop1v_construction(r, n),
            ConstructionKind::Thm3iSunflower => {
                let profile = self.profile.ok_or(ConstructionError::MissingProfile { kind: self.kind })?;
                thm3i_sunflower(profile, r, n)
            }
            ConstructionKind::ParityOverlap => parity_overlap(r, n),
            ConstructionKind::Complete => complete_hypergraph(n, r),
        }
    }
}

fn need_n(kind: ConstructionKind, n: usize, min: usize) -> Result<(), ConstructionError> {
    if n < min {
        Err(ConstructionError::NTooSmall { kind, n, min })
    } else {
        Ok(())
    }
}

fn need_r(kind: ConstructionKind, r: usize, min: usize) -> Result<(), ConstructionError> {
    if r < min {
        Err(ConstructionError::RTooSmall { kind, r, min })
    } else {
        Ok(())
    }
}

fn block(start: usize, len: usize) -> VertexSet {
    VertexSet::full(start + len) - VertexSet::full(start)
}

/// `count` disjoint `r`-edges on consecutive vertices starting at `start`.
fn disjoint_blocks(start: usize, r: usize, count: usize) -> impl Iterator<Item = VertexSet> {
    (0..count).map(move |j| block(start + j * r, r))
}

/// All `r`-subsets of `domain` that contain `core`.
fn complete_over(domain: VertexSet, core: VertexSet, r: usize) -> Result<Vec<VertexSet>, ConstructionError> {
    let free = domain - core;
    let k = r - core.len();
    let estimate = binomial_estimate(free.len(), k);
    if estimate > MAX_EDGES as f64 {
        return Err(HypergraphError::TooManyEdges(estimate as usize).into());
    }
    Ok(free.subsets_of_size(k).map(|s| s | core).collect())
}

fn binomial_estimate(n: usize, k: usize) -> f64 {
    (0..k.min(n)).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

/// `⌊n/r⌋` disjoint edges on the lowest vertices; the rest stay isolated.
pub fn matching(n: usize, r: usize) -> Result<Hypergraph, ConstructionError> {
    need_r(ConstructionKind::Matching, r, 1)?;
    need_n(ConstructionKind::Matching, n, r)?;
    Ok(Hypergraph::new(n, r, disjoint_blocks(0, r, n / r))?)
}

/// All `C(n, r)` edges.
pub fn complete_hypergraph(n: usize, r: usize) -> Result<Hypergraph, ConstructionError> {
    need_r(ConstructionKind::Complete, r, 1)?;
    need_n(ConstructionKind::Complete, n, r)?;
    if n > crate::MAX_VERTICES {
        return Err(HypergraphError::TooManyVertices(n).into());
    }
    let edges = complete_over(VertexSet::full(n), VertexSet::EMPTY, r)?;
    Ok(Hypergraph::new(n, r, edges)?)
}

/// 3-uniform, `n` vertices, no isolated vertices: disjoint triples plus zero,
/// one or two disjoint copies of `K_4^3` for `n ≡ 0, 1, 2 (mod 3)`.
pub fn thm1_extremal(n: usize) -> Result<Hypergraph, ConstructionError> {
    need_n(ConstructionKind::Thm1Extremal, n, 6)?;
    let k4_copies = match n % 3 {
        0 => 0,
        1 => 1,
        _ => 2,
    };
    let triples = (n - 4 * k4_copies) / 3;
    let mut edges: Vec<VertexSet> = disjoint_blocks(0, 3, triples).collect();
    for c in 0..k4_copies {
        let k4 = block(3 * triples + 4 * c, 4);
        edges.extend(k4.subsets_of_size(3));
    }
    Ok(Hypergraph::new(n, 3, edges)?)
}

/// The star `K_{1,n-1}` centered at vertex 0.
pub fn star(n: usize) -> Result<Hypergraph, ConstructionError> {
    need_n(ConstructionKind::Star, n, 2)?;
    let edges = (1..n).map(|v| VertexSet::singleton(0).with(v));
    Ok(Hypergraph::new(n, 2, edges)?)
}

/// `⌊n/r⌋ - 1` disjoint edges and a complete `r`-uniform hypergraph on the
/// remaining `m` vertices (`r ≤ m < 2r`): exactly `⌊n/r⌋` components.
pub fn prop1v_construction(r: usize, n: usize) -> Result<Hypergraph, ConstructionError> {
    need_r(ConstructionKind::Prop1v, r, 1)?;
    need_n(ConstructionKind::Prop1v, n, r)?;
    let singles = n / r - 1;
    let start = singles * r;
    let mut edges: Vec<VertexSet> = disjoint_blocks(0, r, singles).collect();
    edges.extend(complete_over(block(start, n - start), VertexSet::EMPTY, r)?);
    Ok(Hypergraph::new(n, r, edges)?)
}

/// Layout of the sunflower construction, exposed for inspection and tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SunflowerLayout {
    pub p: usize,
    pub i: usize,
    pub f: u128,
    /// Core vertices shared by every petal edge (`r - p` of them).
    pub core: VertexSet,
    /// Number of disjoint `p`-blocks.
    pub petals: usize,
    /// Residue block and the fixed `a`-subset every residue edge contains.
    pub residue: VertexSet,
    pub residue_core: VertexSet,
}

/// Lower-bound construction for general profiles.
///
/// With `(p, i)` from [`best_exponent`]: a core `U` of `r - p` vertices,
/// `⌊(n - 2r + p)/p⌋` disjoint `p`-blocks each forming an edge with `U`, and a
/// residue block `R` of the remaining vertices (`r ≤ |R| < r + p`) whose edges
/// are all `r`-subsets of `R` containing a fixed `a`-set `R_0`, where `a` is
/// the largest element of `A` other than `r`.
pub fn sunflower_layout(profile: Profile, r: usize, n: usize) -> Result<SunflowerLayout, ConstructionError> {
    let kind = ConstructionKind::Thm3iSunflower;
    need_r(kind, r, 1)?;
    need_n(kind, n, 4 * r)?;
    profile.validate(r)?;
    let a = profile
        .elements()
        .filter(|&a| a != r)
        .max()
        .ok_or(ConstructionError::SingletonTopProfile)?;
    let choice = best_exponent(profile, r)?;
    let p = choice.p;
    let petals = (n + p - 2 * r) / p;
    let core = VertexSet::full(r - p);
    let residue_start = (r - p) + p * petals;
    let residue = block(residue_start, n - residue_start);
    assert!(
        (r..r + p).contains(&residue.len()),
        "residue block of size {} outside [{r}, {})",
        residue.len(),
        r + p
    );
    Ok(SunflowerLayout {
        p,
        i: choice.i,
        f: choice.f,
        core,
        petals,
        residue,
        residue_core: block(residue_start, a),
    })
}

pub fn thm3i_sunflower(profile: Profile, r: usize, n: usize) -> Result<Hypergraph, ConstructionError> {
    let layout = sunflower_layout(profile, r, n)?;
    let mut edges: Vec<VertexSet> = disjoint_blocks(r - layout.p, layout.p, layout.petals)
        .map(|petal| petal | layout.core)
        .collect();
    edges.extend(complete_over(layout.residue, layout.residue_core, r)?);
    Ok(Hypergraph::new(n, r, edges)?)
}

/// `f(p, i, A)^⌊(n - 2r + p)/p⌋`, the guaranteed transversal count of
/// [`thm3i_sunflower`]. `None` on `u128` overflow.
pub fn sunflower_lower_bound(profile: Profile, r: usize, n: usize) -> Result<Option<u128>, ConstructionError> {
    let layout = sunflower_layout(profile, r, n)?;
    Ok(layout.f.checked_pow(layout.petals as u32))
}

/// Writing `n = a·r + b` with `0 ≤ b < r`: `a` disjoint edges when `b = 0`;
/// otherwise `a - 1` disjoint edges and two edges on the last `r + b` vertices
/// sharing their lowest `r - b`.
pub fn parity_overlap(r: usize, n: usize) -> Result<Hypergraph, ConstructionError> {
    need_r(ConstructionKind::ParityOverlap, r, 1)?;
    need_n(ConstructionKind::ParityOverlap, n, r)?;
    let (a, b) = (n / r, n % r);
    if b == 0 {
        return matching(n, r);
    }
    let start = (a - 1) * r;
    let shared = block(start, r - b);
    let first = shared | block(start + r - b, b);
    let second = shared | block(start + r, b);
    let edges = disjoint_blocks(0, r, a - 1).chain([first, second]);
    Ok(Hypergraph::new(n, r, edges)?)
}
