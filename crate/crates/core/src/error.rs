use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: dimension mismatch ({}x{} vs {}x{})", .left.0, .left.1, .right.0, .right.1)]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{op}: expected a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is not Hermitian (defect {defect:e} > tolerance {tol:e})")]
    NotHermitian { defect: f64, tol: f64 },
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("Ky Fan index {k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
    #[error("case `{case}` expects {expected} input")]
    WrongInputClass { case: String, expected: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
