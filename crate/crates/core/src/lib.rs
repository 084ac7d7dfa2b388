//! Exact clique counting in graphs without long cycles or long paths.
//!
//! The crate provides
//!
//! * a 64-vertex bitset [`Graph`] with block decomposition, canonical
//!   labeling, and graph6 I/O ([`graph`]);
//! * the extremal families `H(n,k,a)` and the chain/disjoint clique graphs
//!   ([`constructions`]);
//! * exact evaluation of the bounds `f_s`, `g_s`, `h_s` and their endpoint
//!   maxima ([`bounds`]);
//! * clique counts, circumference, longest paths, disintegration cores and
//!   `k`-closure ([`algorithms`]);
//! * isomorphism-free enumeration of small graphs and exhaustive checks of
//!   every bound against it ([`enumerate`], [`verify`], [`props`]).

pub mod algorithms;
pub mod bounds;
pub mod budget;
pub mod constructions;
pub mod enumerate;
mod error;
pub mod graph;
pub mod props;
pub mod random;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
