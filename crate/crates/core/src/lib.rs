//! Maximum eigenvalue multiplicity two: recognition of the graph classes
//! involved, a classifier emitting checkable certificates, exact rational
//! matrix witnesses, and a numerical minimum-rank oracle.

pub mod classifier;
pub mod graph;
pub mod oracle;
pub mod recognition;
pub mod witness;

pub use graph::{Graph, GraphError};
