use thiserror::Error;

/// Errors raised by graph construction, parsing, and the graph operations
/// whose preconditions can be violated by caller input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("edge {u}-{v} given twice with conflicting signs")]
    ConflictingEdge { u: usize, v: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph contains a cycle but a forest was required")]
    NotForest,

    #[error("graph is not a tree")]
    NotTree,

    #[error("component of order {0} found; every component needs at least two vertices")]
    SmallComponent(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(message.into()))
}

pub(crate) fn invalid<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(message.into()))
}
