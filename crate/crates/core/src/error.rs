use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("repeated arc {0} -> {1}")]
    ParallelArc(usize, usize),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("expected {expected} names, found {found}")]
    NameCount { expected: usize, found: usize },
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("missing header `{0}`")]
    MissingHeader(&'static str),
    #[error("cost table: {0}")]
    Costs(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Operations called outside their stated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("expected a {0} digraph")]
    WrongClass(&'static str),
    #[error("expected a connected digraph")]
    NotConnected,
    #[error("{0}")]
    Other(String),
}
