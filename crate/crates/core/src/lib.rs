//! Exact domination tools for Cartesian products with a claw-free factor.
//!
//! The crate provides small-graph infrastructure (bitset graphs, graph6,
//! products, claw detection, isomorphism-free enumeration), exact solvers
//! for γ and i, the cell/chamber decomposition of a claw-free graph around
//! an independent γ-set, and a three-stage labeling of a minimum dominating
//! set of `G □ H` whose every intermediate property is checked on the
//! concrete instance. The [`harness`] sweeps whole corpora and reports the
//! bound `3γ(G□H) >= 2γ(G)γ(H)` in exact arithmetic.

pub mod bitset;
pub mod check;
pub mod claw;
pub mod decomposition;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod labeling;
pub mod product;

pub use bitset::{Vertex, VertexSet};
pub use error::{Error, Result};
pub use graph::Graph;
