//! Brute-force reference implementations, deliberately naive: every subset of
//! the vertex set is tested against every edge.

#![allow(dead_code)]

use hypertrans::{Hypergraph, Profile};

pub fn allowed(a: &[usize], size: u32) -> bool {
    a.contains(&(size as usize))
}

pub fn naive_transversals(h: &Hypergraph, a: &[usize]) -> Vec<u64> {
    let edges: Vec<u64> = h.edges().iter().map(|e| e.mask()).collect();
    (0u64..1 << h.n())
        .filter(|s| edges.iter().all(|e| allowed(a, (s & e).count_ones())))
        .collect()
}

pub fn naive_maximal(h: &Hypergraph, a: &[usize]) -> Vec<u64> {
    let all = naive_transversals(h, a);
    all.iter()
        .copied()
        .filter(|&s| !all.iter().any(|&t| t != s && t & s == s))
        .collect()
}

/// Maximum over every labeled `r`-uniform hypergraph on `n` vertices.
pub fn naive_extremal(n: usize, r: usize, a: &[usize], maximal: bool, no_isolated: bool) -> u128 {
    let candidates: Vec<Vec<usize>> = combinations(n, r);
    let mut best = 0u128;
    for subset in 0u64..1 << candidates.len() {
        let edges: Vec<&[usize]> = candidates
            .iter()
            .enumerate()
            .filter(|(j, _)| subset >> j & 1 == 1)
            .map(|(_, e)| e.as_slice())
            .collect();
        let h = Hypergraph::from_edge_lists(n, r, edges).unwrap();
        if no_isolated && h.has_isolated_vertices() {
            continue;
        }
        let count = if maximal { naive_maximal(&h, a).len() } else { naive_transversals(&h, a).len() };
        best = best.max(count as u128);
    }
    best
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out.sort();
    out
}

pub fn profile(a: &[usize]) -> Profile {
    Profile::new(a.iter().copied()).unwrap()
}
