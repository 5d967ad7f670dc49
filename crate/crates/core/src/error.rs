use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operator must have at least one row and one column (got {rows}x{cols})")]
    Empty { rows: usize, cols: usize },

    #[error("expected {expected} entries for a {rows}x{cols} operator, got {actual}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("{op}: dimension mismatch ({left:?} vs {right:?})")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op}: operator must be square, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("operator is not Hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("operator is not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPositive { eigenvalue: f64 },

    #[error("operators do not commute (commutator norm {norm:e})")]
    NotCommuting { norm: f64 },

    #[error("invalid tolerance {name} = {value}: must lie in [0, 1)")]
    InvalidTolerance { name: &'static str, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("malformed matrix file: {0}")]
    Format(String),

    #[error("{}: {source}", path.display())]
    File {
        path: std::path::PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
