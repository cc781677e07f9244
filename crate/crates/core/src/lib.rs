//! Exact metric dimension and domination number of small graphs, the
//! normalization that turns a minimum dominating set into a resolving set,
//! and the upper bounds on metric dimension that follow from lower bounds on
//! the domination number.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod budget;
pub mod constructive;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod resolve;
pub mod spectral;
pub mod verify;
mod vertex_set;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{DegreeSequence, DistanceMatrix, Girth, Graph, TwinPartition};
pub use vertex_set::VertexSet;
