use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("edge {edge:?} repeats a vertex")]
    DegenerateEdge { edge: Vec<usize> },
    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },
    #[error("pair query needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("instance has {n} vertices but the exact routine is capped at {cap}")]
    SizeLimit { n: usize, cap: usize },
    #[error("part sizes sum to {got}, expected {expected}")]
    BadPartition { expected: usize, got: usize },
    #[error("dimension {m} is too small (need at least {min})")]
    DimensionTooSmall { m: usize, min: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("parameter {name} = {value} outside the supported range {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
