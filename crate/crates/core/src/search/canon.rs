//! Canonical labeling by branch and bound over vertex permutations, and
//! orderly generation of one representative per isomorphism class.
//!
//! The key of a labeled hypergraph is its edge masks sorted ascending; the
//! canonical form is the lexicographically smallest key over all relabelings.
//! Images are assigned in order `0, 1, 2, ...`. Once images `0..=k` are placed,
//! the edges whose image lies inside `{0..=k}` are exactly the key entries
//! below `2^(k+1)`, so a partial key is compared against the best key found so
//! far and losing branches are cut. Swapping two twin vertices (a transposition
//! that is an automorphism) yields identical subtrees, so only one vertex per
//! twin class is tried at each level.

use std::cmp::Ordering;

/// Vertices grouped by "swapping them fixes the edge set", one mask per vertex.
fn twin_classes(n: usize, edges: &[u64]) -> Vec<u64> {
    let mut classes: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    for u in 0..n {
        for w in u + 1..n {
            if classes[u] >> w & 1 == 1 {
                continue;
            }
            let mut swapped: Vec<u64> = edges.iter().map(|&e| swap_bits(e, u, w)).collect();
            swapped.sort_unstable();
            if swapped == sorted {
                let merged = classes[u] | classes[w];
                for (v, class) in classes.iter_mut().enumerate() {
                    if merged >> v & 1 == 1 {
                        *class = merged;
                    }
                }
            }
        }
    }
    classes
}

#[inline]
fn swap_bits(e: u64, u: usize, w: usize) -> u64 {
    let bu = e >> u & 1;
    let bw = e >> w & 1;
    if bu == bw {
        e
    } else {
        e ^ (1u64 << u | 1u64 << w)
    }
}

/// Compares a partial key (entries all below `2^(level+1)`) with the full key
/// `best`, where every entry not yet placed will be at least `2^(level+1)`.
fn compare_partial(partial: &[u64], level: usize, best: &[u64]) -> Ordering {
    let limit = 1u64.checked_shl(level as u32 + 1).unwrap_or(u64::MAX);
    let best_prefix_len = best.iter().take_while(|&&e| e < limit || limit == u64::MAX).count();
    let best_prefix = &best[..best_prefix_len];
    for (a, b) in partial.iter().zip(best_prefix) {
        match a.cmp(b) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    // A shorter prefix means a larger value comes next.
    best_prefix.len().cmp(&partial.len())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Minimize,
    /// Stop as soon as some relabeling beats `best`.
    Refute,
}

struct Canon<'a> {
    n: usize,
    edges: &'a [u64],
    twins: Vec<u64>,
    goal: Goal,
    best: Option<Vec<u64>>,
    refuted: bool,
    image: [u8; 64],
    // per edge: how many of its vertices still lack an image
    pending: Vec<u8>,
    incidence: Vec<Vec<usize>>,
}

impl<'a> Canon<'a> {
    fn new(n: usize, edges: &'a [u64], goal: Goal, best: Option<Vec<u64>>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (i, &e) in edges.iter().enumerate() {
            let mut m = e;
            while m != 0 {
                incidence[m.trailing_zeros() as usize].push(i);
                m &= m - 1;
            }
        }
        Canon {
            n,
            edges,
            twins: twin_classes(n, edges),
            goal,
            best,
            refuted: false,
            image: [0; 64],
            pending: edges.iter().map(|e| e.count_ones() as u8).collect(),
            incidence,
        }
    }

    fn image_of(&self, e: u64) -> u64 {
        let mut out = 0u64;
        let mut m = e;
        while m != 0 {
            out |= 1u64 << self.image[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        out
    }

    fn search(&mut self, level: usize, assigned: u64, partial: &mut Vec<u64>) {
        if level == self.n {
            let better = match &self.best {
                None => true,
                Some(b) => partial.as_slice() < b.as_slice(),
            };
            if better {
                if self.goal == Goal::Refute {
                    self.refuted = true;
                } else {
                    self.best = Some(partial.clone());
                }
            }
            return;
        }
        let mut tried = 0u64;
        for u in 0..self.n {
            if assigned >> u & 1 == 1 || self.twins[u] & tried != 0 {
                continue;
            }
            tried |= 1u64 << u;
            self.image[u] = level as u8;
            let mark = partial.len();
            for k in 0..self.incidence[u].len() {
                let ei = self.incidence[u][k];
                self.pending[ei] -= 1;
                if self.pending[ei] == 0 {
                    let img = self.image_of(self.edges[ei]);
                    partial.push(img);
                }
            }
            partial[mark..].sort_unstable();

            let verdict = match &self.best {
                None => Ordering::Less,
                Some(b) => compare_partial(partial, level, b),
            };
            match verdict {
                Ordering::Greater => {}
                Ordering::Less if self.goal == Goal::Refute => self.refuted = true,
                _ => self.search(level + 1, assigned | 1u64 << u, partial),
            }

            partial.truncate(mark);
            for &ei in &self.incidence[u] {
                self.pending[ei] += 1;
            }
            if self.refuted {
                return;
            }
        }
    }
}

/// Smallest sorted edge-mask list over all relabelings of `0..n`.
pub(crate) fn canonical_key(n: usize, edges: &[u64]) -> Vec<u64> {
    let mut canon = Canon::new(n, edges, Goal::Minimize, None);
    canon.search(0, 0, &mut Vec::with_capacity(edges.len()));
    canon.best.unwrap_or_default()
}

/// True iff `sorted_edges` is already its own canonical key.
pub(crate) fn is_canonical(n: usize, sorted_edges: &[u64]) -> bool {
    let mut canon = Canon::new(n, sorted_edges, Goal::Refute, Some(sorted_edges.to_vec()));
    canon.search(0, 0, &mut Vec::with_capacity(sorted_edges.len()));
    !canon.refuted
}

/// One canonical representative per isomorphism class of `r`-uniform
/// hypergraphs on `n` vertices, each as a sorted edge list.
///
/// Orderly generation: a canonical key minus its largest edge is again
/// canonical, so extending canonical keys by larger edges and keeping the
/// canonical extensions reaches every class exactly once. Output order is the
/// depth-first order of that tree and is deterministic.
pub(crate) fn orderly_generate(n: usize, candidates: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    grow(n, candidates, 0, &mut current, &mut out);
    out
}

fn grow(n: usize, candidates: &[u64], from: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    out.push(current.clone());
    for (j, &e) in candidates.iter().enumerate().skip(from) {
        current.push(e);
        if is_canonical(n, current) {
            grow(n, candidates, j + 1, current, out);
        }
        current.pop();
    }
}
