//! Seeded random hypergraph generators for property checks.

use rand::seq::index::sample;
use rand::Rng;

use crate::hypercore::{Hypergraph, VertexSet};

fn random_edge<R: Rng + ?Sized>(rng: &mut R, n: usize, r: usize) -> VertexSet {
    sample(rng, n, r).into_iter().collect()
}

/// Up to `max_edges` uniformly random `r`-subsets of `0..n` (duplicates merge).
pub fn random_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    r: usize,
    max_edges: usize,
) -> Hypergraph {
    assert!(r >= 1 && r <= n);
    let m = rng.gen_range(0..=max_edges);
    let edges: Vec<VertexSet> = (0..m).map(|_| random_edge(rng, n, r)).collect();
    Hypergraph::new(n, r, edges).expect("random edges are valid")
}

/// A random hypergraph in which every vertex lies in some edge. Requires `n >= r`.
pub fn random_without_isolated<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    r: usize,
    max_edges: usize,
) -> Hypergraph {
    let base = random_hypergraph(rng, n, r, max_edges);
    let mut edges = base.edges().to_vec();
    for v in base.isolated_vertices() {
        let covered = edges.iter().any(|e| e.contains(v));
        if !covered {
            let others = sample(rng, n - 1, r - 1)
                .into_iter()
                .map(|u| if u >= v { u + 1 } else { u });
            edges.push(others.collect::<VertexSet>().with(v));
        }
    }
    Hypergraph::new(n, r, edges).expect("random edges are valid")
}
