//! Exhaustive extremal search: the exact maximum number of (maximal)
//! `A`-transversals over all `r`-uniform hypergraphs on `n` vertices, with a
//! witness.
//!
//! Labeled search walks every subset of the `C(n, r)` candidate edges.
//! Isomorphism-reduced search walks one representative per class. Both are
//! guarded by hard size limits; a search that would not be exhaustive is an
//! error, never a truncated answer.

mod canon;

use std::ops::RangeInclusive;
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::Mode;
use crate::hypercore::{Hypergraph, HypergraphError, Profile, VertexSet};

/// Labeled search walks at most `2^24` edge subsets.
pub const MAX_LABELED_CANDIDATES: usize = 24;
/// Labeled search tabulates all `2^n` vertex subsets.
pub const MAX_LABELED_VERTICES: usize = 12;
/// Isomorphism-reduced search.
pub const MAX_ISO_VERTICES: usize = 8;
/// Canonical labeling.
pub const MAX_CANONICAL_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("no isolated vertices requires n >= r (n={n}, r={r})")]
    NoHostWithoutIsolated { n: usize, r: usize },
    #[error("labeled search over C({n},{r}) = {candidates} candidate edges exceeds the limit of {MAX_LABELED_CANDIDATES}")]
    TooManyCandidates { n: usize, r: usize, candidates: usize },
    #[error("{what} supports n <= {limit}, got n={n}")]
    TooManyVertices { what: &'static str, n: usize, limit: usize },
    #[error("uniformity must be at least 1")]
    ZeroUniformity,
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// The hypergraphs a search ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchSpace {
    pub n: usize,
    pub r: usize,
    /// Only hosts in which every vertex lies in an edge.
    pub no_isolated: bool,
    /// One representative per isomorphism class instead of every labeling.
    pub iso_reduce: bool,
}

impl SearchSpace {
    pub fn new(n: usize, r: usize, no_isolated: bool, iso_reduce: bool) -> Result<Self, SearchError> {
        let space = SearchSpace { n, r, no_isolated, iso_reduce };
        space.check()?;
        Ok(space)
    }

    /// Labeled space of all hypergraphs (the maximal-count setting).
    pub fn all(n: usize, r: usize) -> Self {
        SearchSpace { n, r, no_isolated: false, iso_reduce: false }
    }

    /// Labeled space of hypergraphs without isolated vertices.
    pub fn without_isolated(n: usize, r: usize) -> Self {
        SearchSpace { n, r, no_isolated: true, iso_reduce: false }
    }

    pub fn with_n(self, n: usize) -> Self {
        SearchSpace { n, ..self }
    }

    pub fn iso(self) -> Self {
        SearchSpace { iso_reduce: true, ..self }
    }

    fn check(&self) -> Result<(), SearchError> {
        if self.r == 0 {
            return Err(SearchError::ZeroUniformity);
        }
        if self.no_isolated && self.n < self.r {
            return Err(SearchError::NoHostWithoutIsolated { n: self.n, r: self.r });
        }
        if self.iso_reduce {
            if self.n > MAX_ISO_VERTICES {
                return Err(SearchError::TooManyVertices {
                    what: "isomorphism-reduced search",
                    n: self.n,
                    limit: MAX_ISO_VERTICES,
                });
            }
        } else {
            if self.n > MAX_LABELED_VERTICES {
                return Err(SearchError::TooManyVertices {
                    what: "labeled search",
                    n: self.n,
                    limit: MAX_LABELED_VERTICES,
                });
            }
            let candidates = candidate_edges(self.n, self.r).len();
            if candidates > MAX_LABELED_CANDIDATES {
                return Err(SearchError::TooManyCandidates { n: self.n, r: self.r, candidates });
            }
        }
        Ok(())
    }
}

/// All `r`-subsets of `0..n`, ascending by mask.
fn candidate_edges(n: usize, r: usize) -> Vec<u64> {
    if r > n {
        return Vec::new();
    }
    VertexSet::full(n).subsets_of_size(r).map(VertexSet::mask).collect()
}

fn covers_all(n: usize, edges: impl Iterator<Item = u64>) -> bool {
    edges.fold(0u64, |acc, e| acc | e) == VertexSet::full(n).mask()
}

fn hypergraph_from_masks(n: usize, r: usize, edges: impl IntoIterator<Item = u64>) -> Hypergraph {
    Hypergraph::new(n, r, edges.into_iter().map(VertexSet::from_mask)).expect("candidate edges are valid")
}

fn select(candidates: &[u64], subset: u128) -> impl Iterator<Item = u64> + '_ {
    candidates
        .iter()
        .enumerate()
        .filter(move |(j, _)| subset >> j & 1 == 1)
        .map(|(_, &e)| e)
}

/// Every hypergraph of the space: all labelings in edge-subset index order, or
/// one canonical representative per isomorphism class.
pub fn enumerate_hypergraphs(space: SearchSpace) -> Result<Box<dyn Iterator<Item = Hypergraph> + Send>, SearchError> {
    space.check()?;
    let SearchSpace { n, r, no_isolated, .. } = space;
    let candidates = candidate_edges(n, r);
    let keep = move |edges: &[u64]| !no_isolated || covers_all(n, edges.iter().copied());
    if space.iso_reduce {
        let reps = canon::orderly_generate(n, &candidates);
        Ok(Box::new(
            reps.into_iter()
                .filter(move |e| keep(e))
                .map(move |e| hypergraph_from_masks(n, r, e)),
        ))
    } else {
        let total = 1u128 << candidates.len();
        Ok(Box::new((0..total).filter_map(move |subset| {
            let edges: Vec<u64> = select(&candidates, subset).collect();
            keep(&edges).then(|| hypergraph_from_masks(n, r, edges))
        })))
    }
}

/// Canonical byte encoding: `n`, `r`, then the edge masks of the smallest
/// relabeling as little-endian `u64`s. Equal iff isomorphic.
pub fn canonical_form(h: &Hypergraph) -> Result<Vec<u8>, SearchError> {
    let key = canonical_key(h)?;
    let mut out = Vec::with_capacity(2 + 8 * key.len());
    out.push(h.n() as u8);
    out.push(h.r() as u8);
    for e in key {
        out.extend_from_slice(&e.to_le_bytes());
    }
    Ok(out)
}

fn canonical_key(h: &Hypergraph) -> Result<Vec<u64>, SearchError> {
    if h.n() > MAX_CANONICAL_VERTICES {
        return Err(SearchError::TooManyVertices {
            what: "canonical labeling",
            n: h.n(),
            limit: MAX_CANONICAL_VERTICES,
        });
    }
    let edges: Vec<u64> = h.edges().iter().map(|e| e.mask()).collect();
    Ok(canon::canonical_key(h.n(), &edges))
}

/// The canonical relabeling of `h`.
pub fn canonical_hypergraph(h: &Hypergraph) -> Result<Hypergraph, SearchError> {
    Ok(hypergraph_from_masks(h.n(), h.r(), canonical_key(h)?))
}

/// Isomorphism test; sorted degree sequences are compared before labeling.
pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool, SearchError> {
    if (a.n(), a.r(), a.edge_count()) != (b.n(), b.r(), b.edge_count()) {
        return Ok(false);
    }
    let degrees = |h: &Hypergraph| {
        let mut d: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(a) != degrees(b) {
        return Ok(false);
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}

/// Counts (maximal) transversals of any hypergraph over a fixed candidate-edge
/// universe by tabulating, for every vertex subset, which candidates it violates.
struct SubsetTable {
    n: usize,
    violated: Vec<u128>,
}

impl SubsetTable {
    fn new(n: usize, candidates: &[u64], profile: Profile) -> Self {
        let violated = (0u64..1 << n)
            .map(|s| {
                candidates
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| !profile.contains((e & s).count_ones() as usize))
                    .fold(0u128, |acc, (j, _)| acc | 1u128 << j)
            })
            .collect();
        SubsetTable { n, violated }
    }

    fn count(&self, subset: u128, mode: Mode, scratch: &mut Vec<bool>) -> u128 {
        match mode {
            Mode::All => self.violated.iter().filter(|&&v| v & subset == 0).count() as u128,
            Mode::Maximal => {
                // has_up[s]: some transversal contains s (s itself included).
                // Filled from the top so every strict superset is known first.
                let size = 1usize << self.n;
                scratch.clear();
                scratch.resize(size, false);
                let mut count = 0u128;
                for s in (0..size).rev() {
                    let is_trans = self.violated[s] & subset == 0;
                    let mut dominated = false;
                    let mut free = !s & (size - 1);
                    while free != 0 {
                        let bit = free & free.wrapping_neg();
                        if scratch[s | bit] {
                            dominated = true;
                            break;
                        }
                        free ^= bit;
                    }
                    if is_trans && !dominated {
                        count += 1;
                    }
                    scratch[s] = is_trans || dominated;
                }
                count
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub r: usize,
    pub profile: Profile,
    pub mode: Mode,
    pub no_isolated: bool,
    pub iso_reduce: bool,
    pub maximum: u128,
    pub witness: Hypergraph,
    /// Hypergraphs evaluated (after the isolated-vertex filter).
    pub explored: u64,
    #[serde(rename = "elapsed_ms", with = "crate::verify::duration_ms")]
    pub elapsed: Duration,
}

/// Best value in a block: (value, position of the first hypergraph reaching it).
#[derive(Clone, Copy)]
struct Best {
    value: u128,
    position: u128,
    explored: u64,
    found: bool,
}

impl Best {
    const NONE: Best = Best { value: 0, position: 0, explored: 0, found: false };

    fn offer(&mut self, value: u128, position: u128) {
        self.explored += 1;
        if !self.found || value > self.value {
            *self = Best { value, position, explored: self.explored, found: true };
        }
    }

    /// Larger value wins; ties go to the earlier position, so the merge does
    /// not depend on how the range was split.
    fn merge(self, other: Best) -> Best {
        let explored = self.explored + other.explored;
        let winner = match (self.found, other.found) {
            (false, _) => other,
            (_, false) => self,
            _ if other.value > self.value || (other.value == self.value && other.position < self.position) => other,
            _ => self,
        };
        Best { explored, ..winner }
    }
}

fn split_blocks(total: u128, workers: usize) -> Vec<(u128, u128)> {
    let w = workers as u128;
    (0..w)
        .map(|k| (total * k / w, total * (k + 1) / w))
        .filter(|(a, b)| a < b)
        .collect()
}

/// Exact maximum of the transversal count (`mode = all`) or the maximal
/// transversal count (`mode = maximal`) over the space, with the first
/// hypergraph attaining it. The result does not depend on `workers`.
pub fn max_transversal_count(
    space: SearchSpace,
    profile: Profile,
    mode: Mode,
    workers: usize,
) -> Result<SearchReport, SearchError> {
    space.check()?;
    profile.validate(space.r)?;
    if workers == 0 {
        return Err(SearchError::NoWorkers);
    }
    let start = Instant::now();
    let SearchSpace { n, r, no_isolated, iso_reduce } = space;
    let candidates = candidate_edges(n, r);
    let table = SubsetTable::new(n, &candidates, profile);
    let full = VertexSet::full(n).mask();

    let (best, witness_edges): (Best, Vec<u64>) = if iso_reduce {
        let reps: Vec<u128> = canon::orderly_generate(n, &candidates)
            .into_iter()
            .map(|edges| {
                edges.iter().fold(0u128, |acc, e| {
                    acc | 1u128 << candidates.binary_search(e).expect("edge is a candidate")
                })
            })
            .collect();
        let best = run_blocks(reps.len() as u128, workers, |lo, hi| {
            let mut best = Best::NONE;
            let mut scratch = Vec::new();
            for pos in lo..hi {
                let subset = reps[pos as usize];
                if no_isolated && !covers_all(n, select(&candidates, subset)) {
                    continue;
                }
                best.offer(table.count(subset, mode, &mut scratch), pos);
            }
            best
        });
        let witness = select(&candidates, reps[best.position as usize]).collect();
        (best, witness)
    } else {
        let total = 1u128 << candidates.len();
        let best = run_blocks(total, workers, |lo, hi| {
            let mut best = Best::NONE;
            let mut scratch = Vec::new();
            for subset in lo..hi {
                if no_isolated && select(&candidates, subset).fold(0, |a, e| a | e) != full {
                    continue;
                }
                best.offer(table.count(subset, mode, &mut scratch), subset);
            }
            best
        });
        (best, select(&candidates, best.position).collect())
    };
    debug_assert!(best.found, "a checked space always contains a host");

    Ok(SearchReport {
        n,
        r,
        profile,
        mode,
        no_isolated,
        iso_reduce,
        maximum: best.value,
        witness: hypergraph_from_masks(n, r, witness_edges),
        explored: best.explored,
        elapsed: start.elapsed(),
    })
}

fn run_blocks<F>(total: u128, workers: usize, eval: F) -> Best
where
    F: Fn(u128, u128) -> Best + Sync,
{
    let blocks = split_blocks(total, workers);
    if blocks.len() <= 1 {
        return blocks.first().map_or(Best::NONE, |&(lo, hi)| eval(lo, hi));
    }
    thread::scope(|scope| {
        let handles: Vec<_> = blocks
            .iter()
            .map(|&(lo, hi)| {
                let eval = &eval;
                scope.spawn(move || eval(lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .fold(Best::NONE, Best::merge)
    })
}

/// [`max_transversal_count`] for every `n` in the range, same settings otherwise.
pub fn scan_range(
    template: SearchSpace,
    ns: RangeInclusive<usize>,
    profile: Profile,
    mode: Mode,
    workers: usize,
) -> Result<Vec<SearchReport>, SearchError> {
    ns.map(|n| max_transversal_count(template.with_n(n), profile, mode, workers)).collect()
}
