//! Transmission-based graph invariants for small simple connected graphs.
//!
//! The transmission of a vertex is the sum of its distances to every other
//! vertex; the imbalance of an edge is the absolute difference of its
//! endpoint transmissions. This crate classifies graphs whose imbalances
//! are a single positive constant, builds the graph families known to have
//! that property, machine-checks the structural theorems about them, and
//! sweeps exhaustive catalogs at small orders to verify everything end to
//! end.
//!
//! Highlights:
//! - [`graph::Graph`]: compact adjacency-bitset graphs up to 64 vertices.
//! - [`graph6`]: the line-oriented ASCII interchange format.
//! - [`metrics`]: transmissions, edge imbalances, and classification.
//! - [`canon`]: canonical labeling, forms, and automorphism generators.
//! - [`families`]: deterministic constructors with predicted imbalances.
//! - [`theorems`]: one machine-checkable verdict per structural theorem.
//! - [`search`]: exhaustive enumeration, catalogs, and verification.

pub mod canon;
pub mod distance;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod metrics;
pub mod search;
pub mod structure;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::Graph;
