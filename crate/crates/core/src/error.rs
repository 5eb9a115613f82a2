use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    InvalidVertex { vertex: Vertex, n: usize },

    #[error("invalid edge ({0}, {1}): self-loops are not allowed")]
    InvalidEdge(Vertex, Vertex),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex set must not be empty")]
    EmptySet,

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph has fewer than two vertices; no vertex can strictly reduce its eccentricity")]
    Degenerate,

    #[error("infeasible input: {0}")]
    InfeasibleInput(String),

    #[error("graph with {n} vertices exceeds the exhaustive-search cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("graph generation failed: {0}")]
    GenerationFailed(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("report error: {0}")]
    Report(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
