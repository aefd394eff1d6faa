//! Deciding, enumerating and counting `A`-transversals and maximal
//! `A`-transversals.
//!
//! Maximality means inclusion-maximality: no proper superset of any size is an
//! `A`-transversal. For downward-closed profiles this reduces to checking
//! single-vertex extensions, which is what the fast path does. When a
//! hypergraph has no `A`-transversal at all there are no maximal ones either.

mod backtrack;
mod branching;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use backtrack::Transversals;
pub use branching::enumerate_msis_branching;

use crate::hypercore::{Hypergraph, HypergraphError, Profile, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("{0:?} is not a transversal, so maximality is undefined")]
    NotTransversal(VertexSet),
    #[error("expected a 3-uniform hypergraph, got r={0}")]
    NotThreeUniform(usize),
}

/// What to count: every transversal, or only the inclusion-maximal ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    All,
    Maximal,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::All => "all",
            Mode::Maximal => "maximal",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Mode::All),
            "maximal" => Ok(Mode::Maximal),
            other => Err(format!("unknown mode {other:?} (expected all|maximal)")),
        }
    }
}

/// A hypergraph, a profile validated against its uniformity, and a mode.
#[derive(Debug, Clone)]
pub struct TransversalQuery {
    hypergraph: Hypergraph,
    profile: Profile,
    mode: Mode,
}

impl TransversalQuery {
    pub fn new(hypergraph: Hypergraph, profile: Profile, mode: Mode) -> Result<Self, EngineError> {
        profile.validate(hypergraph.r())?;
        Ok(TransversalQuery { hypergraph, profile, mode })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn count(&self) -> CountResult {
        match self.mode {
            Mode::All => count_transversals(&self.hypergraph, self.profile),
            Mode::Maximal => count_maximal(&self.hypergraph, self.profile),
        }
    }

    /// Counts and keeps the first `limit` sets in mask order.
    pub fn count_with_witnesses(&self, limit: usize) -> CountResult {
        let start = Instant::now();
        let (count, witnesses) = match self.mode {
            Mode::All => {
                let mut witnesses = Vec::new();
                let mut count = 0u128;
                for s in enumerate_transversals(&self.hypergraph, self.profile) {
                    if witnesses.len() < limit {
                        witnesses.push(s);
                    }
                    count += 1;
                }
                (count, witnesses)
            }
            Mode::Maximal => {
                let all = enumerate_maximal(&self.hypergraph, self.profile);
                let count = all.len() as u128;
                (count, all.into_iter().take(limit).collect())
            }
        };
        CountResult { count, witnesses: Some(witnesses), elapsed: start.elapsed() }
    }

    pub fn enumerate(&self) -> Box<dyn Iterator<Item = VertexSet> + '_> {
        match self.mode {
            Mode::All => Box::new(enumerate_transversals(&self.hypergraph, self.profile)),
            Mode::Maximal => Box::new(enumerate_maximal(&self.hypergraph, self.profile).into_iter()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub count: u128,
    pub witnesses: Option<Vec<VertexSet>>,
    pub elapsed: Duration,
}

/// Every edge meets `s` in an allowed number of vertices. Vacuously true
/// without edges.
#[inline]
pub fn is_transversal(h: &Hypergraph, profile: Profile, s: VertexSet) -> bool {
    debug_assert!(s.is_subset(h.vertices()));
    h.edges().iter().all(|&e| profile.contains((e & s).len()))
}

/// All `A`-transversals in increasing mask order.
pub fn enumerate_transversals(h: &Hypergraph, profile: Profile) -> Transversals {
    Transversals::new(h, profile)
}

/// Number of `A`-transversals, multiplied out over connected components;
/// each isolated vertex contributes a factor of two.
pub fn count_transversals(h: &Hypergraph, profile: Profile) -> CountResult {
    let start = Instant::now();
    let isolated = h.isolated_vertices().len() as u32;
    let mut count: u128 = 1u128 << isolated;
    for comp in h.components() {
        let sub = h.induced_subhypergraph(comp);
        count *= Transversals::new(&sub, profile).count() as u128;
        if count == 0 {
            break;
        }
    }
    CountResult { count, witnesses: None, elapsed: start.elapsed() }
}

/// `s ∪ {v}` is still a transversal, given that `s` is one and `v ∉ s`.
#[inline]
pub(crate) fn extends_by_one(h: &Hypergraph, profile: Profile, s: VertexSet, v: usize) -> bool {
    h.edges()
        .iter()
        .filter(|e| e.contains(v))
        .all(|&e| profile.contains((e & s).len() + 1))
}

pub fn is_maximal_transversal(
    h: &Hypergraph,
    profile: Profile,
    s: VertexSet,
) -> Result<bool, EngineError> {
    if !is_transversal(h, profile, s) {
        return Err(EngineError::NotTransversal(s));
    }
    Ok(if profile.is_downward_closed() {
        (h.vertices() - s).iter().all(|v| !extends_by_one(h, profile, s, v))
    } else {
        Transversals::containing(h, profile, s).all(|t| t == s)
    })
}

/// The inclusion-maximal `A`-transversals in increasing mask order. Empty iff
/// the hypergraph has no `A`-transversal.
pub fn enumerate_maximal(h: &Hypergraph, profile: Profile) -> Vec<VertexSet> {
    if profile.is_downward_closed() {
        maximal_by_extension(h, profile)
    } else {
        maximal_by_dominance(h, profile)
    }
}

pub fn count_maximal(h: &Hypergraph, profile: Profile) -> CountResult {
    let start = Instant::now();
    let count = enumerate_maximal(h, profile).len() as u128;
    CountResult { count, witnesses: None, elapsed: start.elapsed() }
}

/// Sound only for downward-closed profiles: adding a vertex never lowers an
/// intersection, so a superset that is a transversal can be shrunk one vertex
/// at a time back to `s + v` for some `v`.
fn maximal_by_extension(h: &Hypergraph, profile: Profile) -> Vec<VertexSet> {
    let all = h.vertices();
    enumerate_transversals(h, profile)
        .filter(|&s| (all - s).iter().all(|v| !extends_by_one(h, profile, s, v)))
        .collect()
}

/// Inclusion-maximal filtering over the full enumeration: scanning by
/// decreasing size, a set is maximal iff no maximal set found so far contains it.
fn maximal_by_dominance(h: &Hypergraph, profile: Profile) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = enumerate_transversals(h, profile).collect();
    all.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut maximal: Vec<VertexSet> = Vec::new();
    for s in all {
        if !maximal.iter().any(|&m| s.is_subset(m)) {
            maximal.push(s);
        }
    }
    maximal.sort_unstable();
    maximal
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn p(v: &[usize]) -> Profile {
        Profile::new(v.iter().copied()).unwrap()
    }

    fn hg(n: usize, r: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, r, edges).unwrap()
    }

    fn k43() -> Hypergraph {
        hg(4, 3, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
    }

    fn brute_force(h: &Hypergraph, profile: Profile) -> Vec<VertexSet> {
        (0u64..1 << h.n())
            .map(VertexSet::from_mask)
            .filter(|&s| h.edges().iter().all(|&e| profile.contains((e & s).len())))
            .collect()
    }

    #[test]
    fn transversal_membership() {
        let t = hg(3, 3, &[&[0, 1, 2]]);
        assert!(is_transversal(&t, Profile::strong(), set(&[0])));
        assert!(!is_transversal(&t, Profile::strong(), set(&[0, 1])));
        assert!(!is_transversal(&k43(), Profile::strong(), set(&[0, 1])));
        assert!(is_transversal(&k43(), Profile::strong(), set(&[0])));
        let empty = Hypergraph::edgeless(3, 3).unwrap();
        assert!(is_transversal(&empty, Profile::singleton(3), set(&[1])));
    }

    #[test]
    fn enumerates_single_triple() {
        let t = hg(3, 3, &[&[0, 1, 2]]);
        let got: Vec<_> = enumerate_transversals(&t, Profile::strong()).collect();
        assert_eq!(got, vec![set(&[]), set(&[0]), set(&[1]), set(&[2])]);
    }

    #[test]
    fn enumerates_two_disjoint_triples() {
        let h = hg(6, 3, &[&[0, 1, 2], &[3, 4, 5]]);
        let got: Vec<_> = enumerate_transversals(&h, Profile::strong()).collect();
        assert_eq!(got.len(), 16);
        assert_eq!(got, brute_force(&h, Profile::strong()));
    }

    #[test]
    fn all_profile_gives_every_subset() {
        let got = enumerate_transversals(&k43(), Profile::all(3)).count();
        assert_eq!(got, 16);
    }

    #[test]
    fn enumeration_on_empty_vertex_set() {
        let h = Hypergraph::edgeless(0, 2).unwrap();
        let got: Vec<_> = enumerate_transversals(&h, Profile::singleton(1)).collect();
        assert_eq!(got, vec![VertexSet::EMPTY]);
        assert_eq!(enumerate_maximal(&h, Profile::singleton(1)), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn counts() {
        let star = hg(5, 2, &[&[0, 1], &[0, 2], &[0, 3], &[0, 4]]);
        assert_eq!(count_transversals(&star, Profile::strong()).count, 17);
        let t = hg(3, 3, &[&[0, 1, 2]]);
        assert_eq!(count_transversals(&t, Profile::singleton(3)).count, 1);
        let two = hg(4, 2, &[&[0, 1], &[2, 3]]);
        assert_eq!(count_transversals(&two, p(&[0, 2])).count, 4);
        let tri = hg(3, 2, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(count_transversals(&tri, Profile::singleton(1)).count, 0);
        let full = Hypergraph::edgeless(64, 2).unwrap();
        assert_eq!(count_transversals(&full, Profile::strong()).count, 1u128 << 64);
    }

    #[test]
    fn maximality() {
        let t = hg(3, 3, &[&[0, 1, 2]]);
        assert!(is_maximal_transversal(&t, Profile::strong(), set(&[0])).unwrap());
        assert!(!is_maximal_transversal(&t, Profile::strong(), set(&[])).unwrap());
        assert!(matches!(
            is_maximal_transversal(&t, Profile::strong(), set(&[0, 1])),
            Err(EngineError::NotTransversal(_))
        ));

        assert_eq!(enumerate_maximal(&k43(), Profile::strong()), vec![set(&[0]), set(&[1]), set(&[2]), set(&[3])]);

        let edge = hg(2, 2, &[&[0, 1]]);
        assert_eq!(enumerate_maximal(&edge, Profile::singleton(1)), vec![set(&[0]), set(&[1])]);
        assert!(is_maximal_transversal(&edge, Profile::singleton(1), set(&[1])).unwrap());
    }

    #[test]
    fn maximal_enumeration_examples() {
        let tri = hg(3, 2, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(enumerate_maximal(&tri, Profile::singleton(1)).is_empty());
        let two = hg(6, 3, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(enumerate_maximal(&two, Profile::strong()).len(), 9);
        let path = hg(3, 2, &[&[0, 1], &[1, 2]]);
        assert_eq!(enumerate_maximal(&path, Profile::strong()), vec![set(&[1]), set(&[0, 2])]);
    }

    #[test]
    fn edgeless_has_one_maximal_set() {
        let h = Hypergraph::edgeless(4, 2).unwrap();
        for profile in [Profile::singleton(0), Profile::singleton(2), p(&[1, 2]), Profile::strong()] {
            assert_eq!(count_transversals(&h, profile).count, 16);
            assert_eq!(enumerate_maximal(&h, profile), vec![h.vertices()]);
        }
    }

    #[test]
    fn non_downward_closed_needs_general_path() {
        // With A = {0, 2} on a single edge, ∅ has no one-vertex extension but
        // the whole edge is a transversal.
        let edge = hg(2, 2, &[&[0, 1]]);
        let a = p(&[0, 2]);
        assert!(!is_maximal_transversal(&edge, a, VertexSet::EMPTY).unwrap());
        assert_eq!(enumerate_maximal(&edge, a), vec![set(&[0, 1])]);
    }

    #[test]
    fn fast_path_agrees_with_dominance_on_downward_closed_profiles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.gen_range(1..=9);
            let r = rng.gen_range(1..=n.min(4));
            let h = crate::random::random_hypergraph(&mut rng, n, r, 10);
            let a = Profile::up_to(rng.gen_range(0..r));
            assert_eq!(maximal_by_extension(&h, a), maximal_by_dominance(&h, a), "{h:?} {a:?}");
        }
    }

    #[test]
    fn component_product_matches_direct_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..150 {
            let n = rng.gen_range(1..=10);
            let r = rng.gen_range(1..=n.min(3));
            let h = crate::random::random_hypergraph(&mut rng, n, r, 6);
            let a = Profile::from_mask(rng.gen_range(1u64..1 << (r + 1))).unwrap();
            let direct = enumerate_transversals(&h, a).count() as u128;
            assert_eq!(count_transversals(&h, a).count, direct, "{h:?} {a:?}");
        }
    }

    #[test]
    fn containing_restricts_to_supersets() {
        let h = hg(4, 2, &[&[0, 1], &[2, 3]]);
        let forced = set(&[0]);
        let got: Vec<_> = Transversals::containing(&h, Profile::strong(), forced).collect();
        let expected: Vec<_> = brute_force(&h, Profile::strong())
            .into_iter()
            .filter(|s| forced.is_subset(*s))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn query_validates_profile() {
        let t = hg(3, 3, &[&[0, 1, 2]]);
        assert!(TransversalQuery::new(t.clone(), p(&[4]), Mode::All).is_err());
        let q = TransversalQuery::new(t, Profile::strong(), Mode::Maximal).unwrap();
        assert_eq!(q.count().count, 3);
        let w = q.count_with_witnesses(2);
        assert_eq!(w.count, 3);
        assert_eq!(w.witnesses.unwrap(), vec![set(&[0]), set(&[1])]);
    }
}
