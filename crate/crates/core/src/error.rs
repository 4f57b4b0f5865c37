use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} outside 1..=4")]
    DegreeOutOfRange(u32),
    #[error("field order {p}^{k} exceeds 2^20")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("independence search budget exhausted: {lower} <= alpha <= {upper}")]
    AlphaBudget { lower: usize, upper: usize, witness: Vec<usize> },
    #[error("pattern has {0} vertices; at most 12 are supported")]
    PatternTooLarge(usize),
    #[error("invalid polarity: {0}")]
    InvalidPolarity(String),
    #[error("graph contains the forbidden pattern {pattern} on vertices {witness:?}")]
    ContainsForbidden { pattern: String, witness: Vec<usize> },
    #[error("provenance: {0}")]
    Provenance(String),
    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
