//! Vertex-coloring reconfiguration.
//!
//! [`reconfig`] is a brute-force oracle over the graph of proper colorings;
//! [`procedures`] holds constructive recoloring schedules and the reduction
//! certificates that chain them; [`recognizers`] decides class membership
//! and which side of each recolorability dichotomy a graph falls on.

pub mod catalog;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod io;
pub mod procedures;
pub mod recognizers;
pub mod reconfig;
pub mod subgraph;

pub use catalog::NamedGraph;
pub use coloring::{Color, Coloring};
pub use error::{Error, Result};
pub use graph::{Embedding, Graph};
pub use reconfig::RecoloringPath;
