use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(usize),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph with {num_vertices} vertices")]
    IndexOutOfRange { vertex: usize, num_vertices: usize },
    #[error("invalid size for {what}: {value}")]
    InvalidSize { what: &'static str, value: usize },
    #[error("expected {expected} degree bounds, got {got}")]
    BoundsLength { expected: usize, got: usize },
    #[error("graph is not a forest")]
    NotAForest,
    #[error("complex would exceed the face cap of {0} faces")]
    FaceCapExceeded(usize),
    #[error("{0} is not a vertex of the complex")]
    NotAVertex(usize),
    #[error("grape search exceeded depth cap {0}")]
    DepthCapExceeded(usize),
    #[error("no grape witness found")]
    NotVerified,
    #[error("decrementing the bound of vertex {0} would go negative")]
    WouldGoNegative(usize),
    #[error("edge {0} is not a valid recursion edge")]
    InvalidRecursionEdge(usize),
    #[error("a star needs at least one leaf")]
    InvalidStar,
    #[error("closed form needs every spine vertex to carry a leaf; spine vertex {0} has none")]
    HypothesisViolated(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("method mismatch: {0}")]
    MethodMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
