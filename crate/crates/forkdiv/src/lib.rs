//! Structural graph theory at desk scale: detectors for the forbidden
//! configurations of fork-free graph theory, perfect-division machinery with
//! a minimal-counterexample search, certified coloring algorithms realizing
//! the quadratic chi-binding bound for (fork, gem)-free and (fork,
//! butterfly)-free graphs, and exhaustive verification campaigns over all
//! small graphs.
//!
//! Everything is exact and deterministic: solvers break ties by vertex
//! index, searches return lexicographically least witnesses, and campaign
//! reports are byte-identical across runs and worker counts.

pub mod campaign;
pub mod canon;
pub mod coloring;
pub mod divisibility;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod patterns;
pub mod replay;
pub mod solve;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use solve::Coloring;
