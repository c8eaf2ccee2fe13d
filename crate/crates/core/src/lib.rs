//! Proper distinguishing colorings for connected graphs of girth at least 5.
//!
//! The constructions color greedily along breadth-first spanning trees and
//! use at most `max_degree + 1` colors (except on the 6-cycle, which needs
//! 4). Every coloring returned by a construction has been checked by an exact
//! automorphism search before it leaves the crate.

pub mod cli;
pub mod coloring;
pub mod corpus;
pub mod error;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod permutation;
mod search;
pub mod solver;
pub mod symmetry;
pub mod tree;

/// Colors are positive integers.
pub type Color = u32;

pub use coloring::{Coloring, ListAssignment};
pub use error::{Error, ParseError, Result};
pub use graph::Graph;
pub use permutation::Permutation;
pub use tree::{BfsTree, TreeDirectives};
