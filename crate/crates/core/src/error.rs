use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("enumeration over {n} vertices exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("no secure vertex cover found")]
    NoSecureCover,

    #[error("illegal move {from}->{to}: {reason}")]
    IllegalMove {
        from: Vertex,
        to: Vertex,
        reason: &'static str,
    },

    #[error("target family is empty")]
    EmptyTargetFamily,

    #[error("distribution has {got} entries, graph has {expected} vertices")]
    DistributionLength { expected: usize, got: usize },

    #[error("{count} distributions of {pebbles} pebbles exceed the cap of {cap}")]
    CapExceeded {
        pebbles: u64,
        count: u128,
        cap: u128,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
