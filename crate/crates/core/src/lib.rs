//! Exact computation of the independence-theoretic invariants of small
//! simple graphs: maximum independent sets and their core/corona, critical
//! sets with ker/diadem/nucleus, maximum matchings, König-Egerváry
//! recognition and its structure theory, plus a counterexample search
//! harness over graph streams.
//!
//! Everything is exact and exponential by design: the target scale is
//! desk-sized graphs (the hard enumerations are guarded at 20 vertices,
//! graphs at 64), where brute force is both feasible and the most
//! trustworthy oracle.

pub mod catalog;
pub mod collections;
pub mod critical;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod independence;
pub mod ke;
pub mod limits;
pub mod matching;
pub mod report;
pub mod search;
pub mod set;
pub mod suite;

pub use graph::{Edge, Graph, GraphError, MAX_VERTICES};
pub use independence::OmegaFamily;
pub use limits::LimitError;
pub use matching::Matching;
pub use report::{TheoremReport, Verdict};
pub use set::VertexSet;
