//! Minimal separators, potential maximal cliques, and exact induced-subgraph
//! algorithms built on them.

pub mod artifacts;
pub mod cli;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod io;
pub mod iso;
pub mod maxsub;
pub mod minsep;
pub mod oracle;
pub mod pmc;
pub mod vertex_set;

pub use artifacts::Artifacts;
pub use graph::Graph;
pub use vertex_set::VertexSet;
