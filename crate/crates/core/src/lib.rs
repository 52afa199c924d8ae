//! Edge blow-ups of graphs: constructions, decomposition families, closed-form
//! Turán numbers and exhaustive oracles for checking them on small instances.

pub mod constructions;
pub mod decomposition;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{Graph, GraphFamily};
