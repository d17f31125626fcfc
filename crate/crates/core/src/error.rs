use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex set over {set} vertices used with a graph on {graph} vertices")]
    UniverseMismatch { set: usize, graph: usize },

    #[error("graph is not even: vertex {vertex} has degree {degree}")]
    NotEvenGraph { vertex: usize, degree: usize },

    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("signed graphs have different underlying graphs")]
    UnderlyingGraphMismatch,

    #[error("signature has {signs} signs for {edges} edges")]
    SignatureLength { signs: usize, edges: usize },

    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("set has {actual} vertices, expected {expected}")]
    WrongCardinality { expected: usize, actual: usize },

    #[error("no {k}-tuple dominating set exists: vertex {vertex} has closed neighborhood of size {size}")]
    Infeasible {
        k: usize,
        vertex: usize,
        size: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("bad vertex label {0:?}")]
    BadLabel(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameters(message.into())
    }
}
