use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({0}, {1}) is not an edge of the graph")]
    MissingEdge(usize, usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("k = {k} is not supported here (need k >= {min}){hint}")]
    InvalidK { k: usize, min: usize, hint: &'static str },

    #[error("not a path-cycle cover: {0}")]
    NotACover(String),

    #[error("vertex {0} is not a singleton of the partition")]
    NotASingleton(usize),

    #[error("edge ({0}, {1}) is not in E1")]
    EdgeOutsideE1(usize, usize),

    #[error("stale augmenting walk: {0}")]
    StaleWalk(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("oracle budget exceeded: {0}")]
    OverBudget(String),

    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
