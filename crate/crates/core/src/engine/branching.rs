//! Maximal strongly independent sets of a 3-uniform hypergraph by branching on
//! a smallest closed neighborhood.
//!
//! Every maximal strongly independent set `X` meets `N[x]` for any vertex `x`,
//! and for `v` in `X ∩ N[x]` the rest `X - v` avoids `N[v]`. The recursion picks
//! `x` with `|N[x]|` minimal, branches on each `v` in `N[x]` and recurses on the
//! vertices outside `N[v]`.
//!
//! The subproblem keeps the *trace* of every edge that does not contain `v`:
//! `e - N[v]` whenever that still has two or more vertices. Keeping only the
//! edges that lie entirely outside `N[v]` is not enough, because an edge that
//! touches `N[v]` in one vertex can still forbid two of the remaining vertices
//! from being chosen together (see the tests). With traces, `X - v` is maximal
//! in the subproblem exactly when `X` is maximal in the original, so every set
//! is produced once per vertex of `X ∩ N[x]`; duplicates are merged by hashing.

use std::collections::HashSet;

use super::{extends_by_one, is_transversal, EngineError};
use crate::hypercore::{Hypergraph, Profile, VertexSet};

/// Maximal strongly independent sets of a 3-uniform hypergraph, in increasing
/// mask order. Isolated vertices are set aside and added to every result.
pub fn enumerate_msis_branching(h: &Hypergraph) -> Result<Vec<VertexSet>, EngineError> {
    if h.r() != 3 {
        return Err(EngineError::NotThreeUniform(h.r()));
    }
    let isolated = h.isolated_vertices().mask();
    let edges: Vec<u64> = h.edges().iter().map(|e| e.mask()).collect();
    let found = branch(h.covered_vertices().mask(), &edges);

    let strong = Profile::strong();
    let mut out: Vec<VertexSet> = found
        .into_iter()
        .map(|m| VertexSet::from_mask(m | isolated))
        .filter(|&s| {
            is_transversal(h, strong, s)
                && h.vertices().difference(s).iter().all(|v| !extends_by_one(h, strong, s, v))
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn closed_neighborhood(edges: &[u64], v: usize) -> u64 {
    edges
        .iter()
        .filter(|&&e| e >> v & 1 == 1)
        .fold(1u64 << v, |acc, &e| acc | e)
}

/// Maximal sets of `vertices` meeting every edge (each of size >= 2) at most once.
fn branch(vertices: u64, edges: &[u64]) -> HashSet<u64> {
    if vertices == 0 {
        return HashSet::from([0]);
    }
    let members = VertexSet::from_mask(vertices);
    let (_, pivot_nbhd) = members
        .iter()
        .map(|x| {
            let nb = closed_neighborhood(edges, x);
            (nb.count_ones(), nb)
        })
        .min_by_key(|&(size, _)| size)
        .expect("non-empty vertex set");

    let mut out = HashSet::new();
    for v in VertexSet::from_mask(pivot_nbhd) {
        let nv = closed_neighborhood(edges, v);
        let rest = vertices & !nv;
        let mut traces: Vec<u64> = edges
            .iter()
            .map(|&e| e & !nv)
            .filter(|t| t.count_ones() >= 2)
            .collect();
        traces.sort_unstable();
        traces.dedup();
        out.extend(branch(rest, &traces).into_iter().map(|y| y | 1u64 << v));
    }
    out
}
