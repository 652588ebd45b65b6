//! Invariants of edge ideals of simple graphs.
//!
//! The crate computes, for a simple graph G on up to 64 vertices:
//!
//! * combinatorial invariants: the 3-disjoint edge number c, the bouquet
//!   invariants d and d', big height, domination and edgewise-domination
//!   numbers, unmixedness;
//! * homological invariants of R/I(G) through an exact Hochster-formula
//!   oracle: graded Betti tables, regularity, projective dimension, depth;
//! * graph classifications: vertex decomposability with replayable
//!   certificates, C5-freeness, chordality, bipartiteness;
//! * Alexander duality: cover ideals, primary decomposition and the
//!   associated identity checks;
//! * a verification harness that evaluates the relations between all of the
//!   above on generated graph corpora, plus a counterexample search for
//!   d = d' on C5-free vertex decomposable graphs.

pub mod betti;
pub mod complex;
pub mod config;
pub mod decomp;
pub mod dual;
pub mod error;
pub mod generate;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod report;
pub mod search;
pub mod vset;

pub use config::Config;
pub use error::{Error, Result};
pub use graph::Graph;
pub use homology::FieldChar;
pub use vset::VertexSet;
