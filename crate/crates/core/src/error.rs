use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty intersection base")]
    EmptyIntersectionBase,
    #[error("empty graph")]
    EmptyGraph,
    #[error("empty candidate δ-set")]
    EmptyDeltaCandidate,
    #[error("complement of the vertex set is empty")]
    ComplementEmpty,
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set bound to {found} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not an {kind}-prefix: {reason}")]
    NotAPrefix { kind: &'static str, reason: String },
    #[error("sequence has length {0}; theorem requires r >= 2")]
    SequenceTooShort(usize),
    #[error("no theorem applies to this sequence: {0}")]
    NoApplicableTheorem(String),
    #[error("instance too large for exact oracle (n = {n}, cap = {cap})")]
    InstanceTooLarge { n: usize, cap: usize },
    #[error("invalid oracle limits: {0}")]
    InvalidLimits(String),
    #[error("{msg} at line {line}")]
    Parse { line: usize, msg: String },
    #[error("usage: {0}")]
    Usage(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
