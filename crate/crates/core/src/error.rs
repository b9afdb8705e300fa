use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("graph must have at least one vertex")]
    NoVertices,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("negative or non-finite weight {0}")]
    InvalidWeight(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("expected {expected} weights, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },

    #[error("not a spanning tree: {0}")]
    NotSpanningTree(String),

    #[error("malformed distance table: {0}")]
    MalformedMatrix(String),

    #[error("the endpoints of an edge must differ (got {0} twice)")]
    SameEndpoints(usize),

    #[error("exhaustive enumeration limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },

    #[error("edge weights are not pairwise distinct (edges {0} and {1})")]
    DuplicateWeights(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        match self {
            e @ (Error::Syntax { .. } | Error::AtLine { .. }) => e,
            e => Error::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }
}
