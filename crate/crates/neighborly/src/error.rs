//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum OmError {
    #[error("chirotope needs {expected} signs for rank {rank} on {n} elements, got {got}")]
    SignCount {
        rank: usize,
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("uniform chirotope may not contain zero signs (index {index})")]
    ZeroSign { index: usize },
    #[error("subset size {got} invalid here (expected {expected})")]
    SubsetSize { expected: usize, got: usize },
    #[error("deleting from a rank-{rank} chirotope on {n} elements would drop below rank")]
    RankDeficient { rank: usize, n: usize },
    #[error("cannot contract {size} elements of a rank-{rank} chirotope")]
    ContractTooLarge { rank: usize, size: usize },
    #[error("degenerate point configuration: zero determinant on subset {subset:?}")]
    Degenerate { subset: Vec<usize> },
    #[error("neighborliness parameter k={k} outside 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("refusing brute-force covector closure for n={n} (limit {limit})")]
    SizeGuard { n: usize, limit: usize },
    #[error("matrix is not square ({rows} rows, first row width {cols})")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("operation requires odd rank, got {rank}")]
    EvenRank { rank: usize },
    #[error("facet-ridge graph is disconnected")]
    Disconnected,
    #[error("hamiltonicity test needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("quotient size {size} outside 1..={max}")]
    QuotientSize { size: usize, max: usize },
    #[error("biquadratic system requires a GP-consistent chirotope")]
    GpInconsistent,
    #[error("certificate references unknown inequality id {0}")]
    UnknownInequality(usize),
    #[error("certificate multipliers must be positive")]
    NonPositiveMultiplier,
    #[error("catalog parse error at line {line}: {msg}")]
    CatalogParse { line: usize, msg: String },
    #[error("catalog entries disagree on (rank, n)")]
    MixedCatalog,
    #[error("resource limit reached: {0}")]
    ResourceLimit(String),
    #[error("unknown analysis '{0}'")]
    UnknownAnalysis(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
