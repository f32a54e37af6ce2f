use thiserror::Error;

/// Errors raised by the library. Every variant maps to a precondition
/// violation of some operation; arithmetic itself never fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<u64>),
    #[error("invalid rectangle: {partition} is not contained in ({width}^{height})")]
    InvalidRectangle {
        partition: String,
        width: usize,
        height: usize,
    },
    #[error("bialternant undefined at non-distinct point")]
    NonDistinctPoint,
    #[error("partition has {parts} parts but only {vars} variables are available")]
    TooManyParts { parts: usize, vars: usize },
    #[error("tableaux evaluation limited to |lambda| <= 10 and at most 5 variables (got {cells} cells, {vars} variables)")]
    TableauxGuard { cells: usize, vars: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("bad index set: {0}")]
    BadIndices(String),
    #[error("degree {degree} out of range 0..={top}")]
    DegreeOutOfRange { degree: i64, top: usize },
    #[error("invalid ring parameters d={d}, q={q}: need d >= q >= 1")]
    RingParams { d: usize, q: usize },
    #[error("linear form must be nonzero")]
    ZeroForm,
    #[error("non-square multiplication map: expected {expected} forms, got {got}")]
    NonSquareMap { expected: usize, got: usize },
    #[error("inconsistent split: {0}")]
    Split(String),
    #[error("literal formula undefined: {0}")]
    LiteralUndefined(String),
    #[error("entries must be nonzero: {0}")]
    ZeroEntry(String),
    #[error("length mismatch: {0}")]
    Length(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
