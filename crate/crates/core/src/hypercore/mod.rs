//! Hypergraph representation, vertex-set algebra and the text format.

mod hypergraph;
mod profile;
mod text;
mod vertex_set;

pub use hypergraph::{Hypergraph, MAX_EDGES};
pub use profile::Profile;
pub use text::{parse_hypergraph, serialize_hypergraph};
pub use vertex_set::{Iter, KSubsets, VertexSet, MAX_VERTICES};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("{0} vertices exceeds the capacity of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("{0} edges exceeds the capacity of {MAX_EDGES}")]
    TooManyEdges(usize),
    #[error("uniformity must be at least 1")]
    ZeroUniformity,
    #[error("edge of size {size} in a {r}-uniform hypergraph")]
    WrongEdgeSize { size: usize, r: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} repeated within an edge")]
    RepeatedVertex(usize),
    #[error("shadow uniformity {k} must satisfy 1 <= k < {r}")]
    BadShadowUniformity { k: usize, r: usize },
    #[error("lift target {target} must exceed the uniformity {r}")]
    BadLiftUniformity { target: usize, r: usize },
    #[error("uniformities differ: {0} vs {1}")]
    UniformityMismatch(usize, usize),
    #[error("not a permutation of the vertex set")]
    BadPermutation,
    #[error("missing `n r` header")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed edge {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: edge arity {arity} != r={r}")]
    EdgeArity { line: usize, arity: usize, r: usize },
    #[error("profile must be non-empty")]
    EmptyProfile,
    #[error("profile element {element} exceeds uniformity {r}")]
    ProfileElementTooLarge { element: usize, r: usize },
    #[error("cannot parse profile {0:?}")]
    BadProfile(String),
}
