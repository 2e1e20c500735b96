//! Exact workbench for 4-clique counts in graphs whose complement is
//! triangle-free (independence number at most 2).
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: bitset adjacency, complements, predicates, builders.
//! - [`graph6`]: the graph6 interchange format.
//! - [`random`]: seeded generators for arbitrary and complement-triangle-free graphs.
//! - [`census`]: order-3 / order-4 induced-subgraph counts plus a brute-force oracle.
//! - [`identities`]: per-identity verifiers producing exact certificates.
//! - [`constructions`]: lexicographic blow-ups of the 5-cycle.
//! - [`canon`], [`enumerate`], [`search`]: canonical forms, isomorphism-free
//!   enumeration of triangle-free graphs, exhaustive and heuristic minimisation.
//! - [`bounds`]: the scalar bound calculus in exact rationals.

pub mod bits;
pub mod bounds;
pub mod canon;
pub mod census;
pub mod constructions;
pub mod enumerate;
mod error;
pub mod graph;
pub mod graph6;
pub mod identities;
pub mod json;
pub mod random;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, GraphFamily};

/// Exact rational type used throughout the certificate and bound code.
pub type Rational = num_rational::BigRational;
