//! Exact enumeration, counting and extremal search of `A`-transversals in
//! `r`-uniform hypergraphs.
//!
//! A vertex set `S` is an `A`-transversal of a hypergraph when every edge
//! meets `S` in a number of vertices lying in the profile `A`. Strongly
//! independent sets are the `{0,1}`-transversals; ordinary independent sets
//! are the `{0,...,r-1}`-transversals.

pub mod bounds;
pub mod constructions;
pub mod engine;
pub mod hypercore;
pub mod random;
pub mod search;
pub mod verify;

pub use hypercore::{
    parse_hypergraph, serialize_hypergraph, Hypergraph, HypergraphError, Profile, VertexSet,
    MAX_VERTICES,
};
