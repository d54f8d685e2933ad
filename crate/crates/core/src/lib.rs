//! Verification engine for extremal subgraph counts in planar graphs.
//!
//! The crate enumerates all maximal planar graphs (triangulations) of a
//! given order up to isomorphism, counts copies of fixed patterns (paths,
//! cycles, stars, bicliques) with closed-form identities backed by
//! brute-force oracles, constructs the known extremal families, and
//! certifies that the enumerated maxima and extremal graphs match the known
//! exact values.

pub mod canon;
pub mod census;
pub mod counting;
pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod planarity;

pub use canon::{canonical_code, CanonicalCode};
pub use counting::{PatternSpec, TypeBreakdown};
pub use embedding::{embed, Embedding};
pub use enumerate::{Flip, TriangulationSet};
pub use error::{Error, Result};
pub use graph::Graph;
