//! Must-include simple path and cycle queries on undirected graphs.
//!
//! Given a connected graph and three elements (vertices or edges), the engine
//! decides whether a simple cycle contains all three, and produces one when
//! it does. Path queries between `s` and `t` through two vertices reduce to
//! the cycle query on the graph with the edge `(s,t)` added. The exclusion
//! enumerator lists every vertex pair that no simple `s`-`t` path can visit
//! together.

pub mod connectivity;
pub mod epe;
pub mod error;
pub mod fixtures;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{parse_edge_list, Cycle, EdgeId, ElementRef, Graph, Path, VertexId};
pub mod oracle;
pub mod query;
pub mod spqr;
pub mod witness;

use std::sync::OnceLock;

/// True when `MUSTPATH_DEBUG=1`: enables expensive invariant checks, such as
/// verifying that every R skeleton is triconnected.
pub fn debug_checks() -> bool {
    static FLAG: OnceLock<bool> = OnceLock::new();
    *FLAG.get_or_init(|| std::env::var("MUSTPATH_DEBUG").is_ok_and(|v| v == "1"))
}

/// Linear-time invariant checks: on in debug builds or with `MUSTPATH_DEBUG=1`.
pub(crate) fn cheap_checks() -> bool {
    cfg!(debug_assertions) || debug_checks()
}
