//! Total domination number versus minimum maximal matching number.
//!
//! Exact solvers for `gamma_t` and `mu*`, the matching-based
//! characterization of graphs with `gamma_t = 2 mu*`, a polynomial-time
//! recognizer for minimum degree two, and generators for the associated
//! graph families.

pub mod catalog;
pub mod characterization;
pub mod error;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod oracles;
pub mod recognizer;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphBuilder};
pub use matching::Matching;
