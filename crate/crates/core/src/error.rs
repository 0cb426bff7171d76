use thiserror::Error;

use crate::graph::Edge;

/// Errors raised by parsing, structural queries, solvers and generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("isolated vertex: gamma_t undefined (vertex {0})")]
    IsolatedVertex(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has no edges")]
    Edgeless,

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("edge {0} is not in the graph")]
    EdgeNotInGraph(Edge),

    #[error("edges {0} and {1} share an endpoint, not a matching")]
    NotAMatching(Edge, Edge),

    #[error("matching is not maximal: edge {0} is not dominated")]
    NotMaximal(Edge),

    #[error("minimum degree {found} outside the supported range {expected}")]
    MinDegree {
        found: usize,
        expected: &'static str,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("edge {0} joins a vertex of S- to another support vertex")]
    Classification(Edge),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),

    #[error("{what} limit exceeded: {found} > {limit}")]
    ResourceLimit {
        what: &'static str,
        found: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
