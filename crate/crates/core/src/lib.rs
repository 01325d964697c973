//! Exact offensive-alliance invariants of small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: the graph type, graph6 / edge-list formats, generators and
//!   structural algorithms (bipartiteness, blocks, line graphs).
//! * [`kernel`]: boundary and alliance / domination predicates.
//! * [`solvers`]: exact minimum (and maximum) invariants by pruned search.
//! * [`spectral`]: Laplacian spectral radius and closed-form bound reports.
//! * [`harness`]: a registry of checkable claims run over graph corpora.
//!
//! Subset searches are data parallel when the `parallel` feature (on by
//! default) is enabled; results never depend on the thread count.

pub mod error;
pub mod graph;
pub mod harness;
pub mod kernel;
pub mod par;
pub mod solvers;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
