use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0},{1}}} already present")]
    EdgeExists(usize, usize),
    #[error("edge {{{0},{1}}} not present")]
    EdgeAbsent(usize, usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("order {n} exceeds the enumeration ceiling {ceiling}")]
    TooLarge { n: usize, ceiling: usize },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("bad order {n} for {family}")]
    BadOrder { family: &'static str, n: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("vertex {vertex} has degree {degree}, need at least 2")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("cannot parse family spec {0:?}")]
    ParseFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
