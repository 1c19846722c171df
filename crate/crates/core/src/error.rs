use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("input contains no edges")]
    EmptyInput,
    #[error("self-loop on vertex {0:?}")]
    SelfLoop(VertexId),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0:?}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph consists of a single edge")]
    SingleEdge,
    #[error("source and target coincide")]
    SameEndpoints,
    #[error("queried elements are not distinct")]
    NonDistinctElements,
    #[error("path count must be at least 1")]
    InvalidPathCount,
    #[error("connectivity order {0} is not supported (expected 2 or 3)")]
    UnsupportedOrder(usize),
    #[error("skeleton edge {edge} of component {component} is not virtual")]
    NotVirtual { component: u32, edge: usize },
    #[error("component {0} is not an R component")]
    NotRComponent(u32),
    #[error("element is not part of the requested split subgraph")]
    OutsideSplit,
    #[error("graph is not triconnected")]
    NotTriconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph has {found} vertices, oracle bound is {bound}")]
    OracleBound { found: usize, bound: usize },
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

impl Error {
    /// True when the error was caused by the caller's input rather than a
    /// broken invariant inside the engine.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
