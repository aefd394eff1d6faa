use serde::{Deserialize, Serialize};

use super::{HypergraphError, VertexSet, MAX_VERTICES};

/// Upper bound on the number of edges produced by the shadow and complete builders.
pub const MAX_EDGES: usize = 1 << 20;

/// An `r`-uniform hypergraph on vertices `0..n`.
///
/// Edges are deduplicated and kept sorted by mask value, so two hypergraphs
/// with the same labeled edge set compare equal and serialize identically.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypergraphRepr", into = "HypergraphRepr")]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new<I>(n: usize, r: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        if r == 0 {
            return Err(HypergraphError::ZeroUniformity);
        }
        let universe = VertexSet::full(n);
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for &e in &edges {
            if !e.is_subset(universe) {
                let v = (e - universe).first().unwrap_or(0);
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
            }
            if e.len() != r {
                return Err(HypergraphError::WrongEdgeSize { size: e.len(), r });
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Hypergraph { n, r, edges })
    }

    /// Builds from edges given as vertex-index lists.
    pub fn from_edge_lists<E, L>(n: usize, r: usize, edges: L) -> Result<Self, HypergraphError>
    where
        E: AsRef<[usize]>,
        L: IntoIterator<Item = E>,
    {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        let mut masks = Vec::new();
        for edge in edges {
            let edge = edge.as_ref();
            if edge.len() != r {
                return Err(HypergraphError::WrongEdgeSize { size: edge.len(), r });
            }
            let mut mask = VertexSet::EMPTY;
            for &v in edge {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
                if mask.contains(v) {
                    return Err(HypergraphError::RepeatedVertex(v));
                }
                mask = mask.with(v);
            }
            masks.push(mask);
        }
        Self::new(n, r, masks)
    }

    pub fn edgeless(n: usize, r: usize) -> Result<Self, HypergraphError> {
        Self::new(n, r, [])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<(), HypergraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// `N[v]`: `v` together with every vertex that shares an edge with it.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, HypergraphError> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .fold(VertexSet::singleton(v), |acc, &e| acc | e))
    }

    /// Vertices covered by at least one edge.
    pub fn covered_vertices(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices() - self.covered_vertices()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.covered_vertices() != self.vertices()
    }

    /// Vertex sets of the connected components spanned by the edges.
    /// Isolated vertices are not reported. Components are ordered by lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining: Vec<VertexSet> = self.edges.clone();
        let mut out = Vec::new();
        while let Some(seed) = remaining.pop() {
            let mut comp = seed;
            loop {
                let before = remaining.len();
                remaining.retain(|&e| {
                    if e.is_disjoint(comp) {
                        true
                    } else {
                        comp = comp | e;
                        false
                    }
                });
                if remaining.len() == before {
                    break;
                }
            }
            out.push(comp);
        }
        out.sort_unstable_by_key(|c| c.first());
        out
    }

    /// Keeps the edges inside `w` and renumbers the kept vertices `0..|w|`
    /// preserving their order.
    pub fn induced_subhypergraph(&self, w: VertexSet) -> Hypergraph {
        self.induced_with_map(w).0
    }

    /// Like [`induced_subhypergraph`](Self::induced_subhypergraph), also returning
    /// the original index of each new vertex.
    pub fn induced_with_map(&self, w: VertexSet) -> (Hypergraph, Vec<usize>) {
        let w = w & self.vertices();
        let map = w.to_vec();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_subset(w))
            .map(|&e| compress(e, w))
            .collect::<Vec<_>>();
        let h = Hypergraph::new(map.len(), self.r, edges).expect("induced edges are valid");
        (h, map)
    }

    /// The `k`-uniform hypergraph on the same vertices whose edges are the
    /// `k`-subsets of edges of `self`.
    pub fn k_shadow(&self, k: usize) -> Result<Hypergraph, HypergraphError> {
        if k == 0 || k >= self.r {
            return Err(HypergraphError::BadShadowUniformity { k, r: self.r });
        }
        let mut edges = Vec::new();
        for &e in &self.edges {
            edges.extend(e.subsets_of_size(k));
            if edges.len() > 4 * MAX_EDGES {
                edges.sort_unstable();
                edges.dedup();
                if edges.len() > MAX_EDGES {
                    return Err(HypergraphError::TooManyEdges(edges.len()));
                }
            }
        }
        let h = Hypergraph::new(self.n, k, edges)?;
        if h.edge_count() > MAX_EDGES {
            return Err(HypergraphError::TooManyEdges(h.edge_count()));
        }
        Ok(h)
    }

    /// Appends `r_target - r` new vertices (the highest indices) and adds all
    /// of them to every edge.
    pub fn lift_common(&self, r_target: usize) -> Result<Hypergraph, HypergraphError> {
        if r_target <= self.r {
            return Err(HypergraphError::BadLiftUniformity { target: r_target, r: self.r });
        }
        let extra = r_target - self.r;
        let n = self.n + extra;
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        let fresh = VertexSet::full(n) - VertexSet::full(self.n);
        Hypergraph::new(n, r_target, self.edges.iter().map(|&e| e | fresh))
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph, HypergraphError> {
        if perm.len() != self.n {
            return Err(HypergraphError::BadPermutation);
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(HypergraphError::BadPermutation);
            }
            seen = seen.with(p);
        }
        let edges = self.edges.iter().map(|e| e.iter().map(|v| perm[v]).collect());
        Hypergraph::new(self.n, self.r, edges)
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph, HypergraphError> {
        if self.r != other.r {
            return Err(HypergraphError::UniformityMismatch(self.r, other.r));
        }
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        let shifted = other.edges.iter().map(|e| VertexSet::from_mask(e.mask() << self.n));
        Hypergraph::new(n, self.r, self.edges.iter().copied().chain(shifted))
    }
}

/// Packs the bits of `set` that lie in `domain` into the low bits, preserving order.
pub(crate) fn compress(set: VertexSet, domain: VertexSet) -> VertexSet {
    let mut out = 0u64;
    for (i, v) in domain.iter().enumerate() {
        if set.contains(v) {
            out |= 1u64 << i;
        }
    }
    VertexSet::from_mask(out)
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("edges", &self.edges)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphRepr> for Hypergraph {
    type Error = HypergraphError;

    fn try_from(repr: HypergraphRepr) -> Result<Self, Self::Error> {
        Hypergraph::from_edge_lists(repr.n, repr.r, repr.edges)
    }
}

impl From<Hypergraph> for HypergraphRepr {
    fn from(h: Hypergraph) -> Self {
        HypergraphRepr {
            n: h.n,
            r: h.r,
            edges: h.edges.iter().map(|e| e.to_vec()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn k43() -> Hypergraph {
        Hypergraph::from_edge_lists(4, 3, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap()
    }

    fn triple() -> Hypergraph {
        Hypergraph::from_edge_lists(3, 3, [[0, 1, 2]]).unwrap()
    }

    #[test]
    fn build_and_dedup() {
        assert_eq!(triple().edge_count(), 1);
        assert_eq!(k43().edge_count(), 4);
        let twice = Hypergraph::from_edge_lists(3, 3, [[0, 1, 2], [2, 1, 0]]).unwrap();
        assert_eq!(twice, triple());
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            Hypergraph::from_edge_lists(3, 3, [vec![0, 1]]),
            Err(HypergraphError::WrongEdgeSize { size: 2, r: 3 })
        ));
        assert!(matches!(
            Hypergraph::from_edge_lists(3, 3, [[0, 1, 3]]),
            Err(HypergraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            Hypergraph::from_edge_lists(3, 3, [[0, 1, 1]]),
            Err(HypergraphError::RepeatedVertex(1))
        ));
        assert!(matches!(Hypergraph::edgeless(65, 2), Err(HypergraphError::TooManyVertices(65))));
        assert!(matches!(Hypergraph::edgeless(3, 0), Err(HypergraphError::ZeroUniformity)));
        assert!(Hypergraph::edgeless(64, 2).is_ok());
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(triple().closed_neighborhood(0).unwrap(), set(&[0, 1, 2]));
        assert_eq!(k43().closed_neighborhood(0).unwrap(), set(&[0, 1, 2, 3]));
        assert_eq!(Hypergraph::edgeless(3, 3).unwrap().closed_neighborhood(0).unwrap(), set(&[0]));
        assert!(triple().closed_neighborhood(3).is_err());
    }

    #[test]
    fn isolated() {
        let h = Hypergraph::from_edge_lists(5, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(h.isolated_vertices(), set(&[3, 4]));
        assert!(k43().isolated_vertices().is_empty());
        assert_eq!(Hypergraph::edgeless(3, 3).unwrap().isolated_vertices(), set(&[0, 1, 2]));
    }

    #[test]
    fn induced() {
        let sub = triple().induced_subhypergraph(set(&[0, 1]));
        assert_eq!((sub.n(), sub.edge_count()), (2, 0));

        let two = Hypergraph::from_edge_lists(6, 3, [[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(two.induced_subhypergraph(set(&[0, 1, 2])), triple());

        assert_eq!(k43().induced_subhypergraph(set(&[0, 1, 2])), triple());

        let (h, map) = two.induced_with_map(set(&[1, 3, 4, 5]));
        assert_eq!(map, vec![1, 3, 4, 5]);
        assert_eq!(h.edges(), &[set(&[1, 2, 3])]);
    }

    #[test]
    fn shadows() {
        let tri = triple().k_shadow(2).unwrap();
        assert_eq!(tri.edges(), &[set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);
        let k4 = k43().k_shadow(2).unwrap();
        assert_eq!((k4.n(), k4.edge_count()), (4, 6));
        assert_eq!(Hypergraph::edgeless(4, 3).unwrap().k_shadow(2).unwrap().edge_count(), 0);
        assert!(k43().k_shadow(3).is_err());
        assert!(k43().k_shadow(0).is_err());
    }

    #[test]
    fn lifts() {
        let tri = Hypergraph::from_edge_lists(3, 2, [[0, 1], [0, 2], [1, 2]]).unwrap();
        let lifted = tri.lift_common(3).unwrap();
        let expected = Hypergraph::from_edge_lists(4, 3, [[0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(lifted, expected);

        let pair = Hypergraph::from_edge_lists(2, 2, [[0, 1]]).unwrap();
        assert_eq!(pair.lift_common(3).unwrap(), triple());

        let empty = Hypergraph::edgeless(2, 2).unwrap().lift_common(3).unwrap();
        assert_eq!((empty.n(), empty.r(), empty.edge_count()), (3, 3, 0));

        assert!(pair.lift_common(2).is_err());
        assert!(matches!(
            Hypergraph::edgeless(63, 2).unwrap().lift_common(4),
            Err(HypergraphError::TooManyVertices(65))
        ));
    }

    #[test]
    fn components_split_on_disjoint_edges() {
        let h = Hypergraph::from_edge_lists(8, 2, [[0, 1], [1, 2], [4, 5], [6, 7], [5, 6]]).unwrap();
        assert_eq!(h.components(), vec![set(&[0, 1, 2]), set(&[4, 5, 6, 7])]);
    }

    #[test]
    fn relabel_and_union() {
        let h = Hypergraph::from_edge_lists(3, 2, [[0, 1]]).unwrap();
        let r = h.relabel(&[2, 1, 0]).unwrap();
        assert_eq!(r.edges(), &[set(&[1, 2])]);
        assert!(h.relabel(&[0, 0, 1]).is_err());
        let u = triple().disjoint_union(&triple()).unwrap();
        assert_eq!(u.edges(), &[set(&[0, 1, 2]), set(&[3, 4, 5])]);
    }

    #[test]
    fn serde_round_trip() {
        let json = serde_json::to_string(&k43()).unwrap();
        assert_eq!(json, r#"{"n":4,"r":3,"edges":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}"#);
        let back: Hypergraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, k43());
    }
}
