//! Structural graph algorithms around moplexes.
//!
//! * [`moplex`]: moplexes, moplicial and avoidable vertices.
//! * [`separators`]: minimal separators and their full components.
//! * [`asteroidal`]: asteroidal sets of vertices and of moplexes.
//! * [`orderings`]: umbrella-free orderings, DFS/LDFS predicates and the
//!   DFS+/LDFS+ sweeps.
//! * [`classes`]: recognizers for chordal, cochain, proper interval and
//!   cocomparability graphs, and the moplex-preference orientation of a
//!   2-moplex graph.
//! * [`hamiltonian`]: Hamiltonian paths of connected 2-moplex graphs.
//! * [`generators`]: gadget constructions and test corpora.
//! * [`oracles`]: exponential reference implementations used by the tests.

pub mod asteroidal;
pub mod classes;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod hamiltonian;
pub mod moplex;
pub mod oracles;
pub mod orderings;
pub mod separators;
pub mod set;

pub use error::{Error, Result};
pub use graph::{Graph, VertexMap};
pub use moplex::Moplex;
pub use orderings::VertexOrdering;
pub use separators::SeparatorCertificate;
pub use set::VertexSet;
