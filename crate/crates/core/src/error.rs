use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {vertex} out of range for {n} vertices")]
    DanglingVertexIndex { vertex: usize, n: usize },
    #[error("embedding is not connected")]
    DisconnectedEmbedding,
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("rotation system is not planar (V - E + F = {0})")]
    NotPlanar(i64),
    #[error("cycle length {0} not supported (expected 3, 4 or 5)")]
    UnsupportedLength(usize),
    #[error("vertex {vertex} is not on cycle {cycle:?}")]
    VertexNotOnCycle { vertex: usize, cycle: [usize; 3] },
    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("3-face {face} belongs to more than one trio")]
    OverlappingTrios { face: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
