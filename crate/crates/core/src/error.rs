use thiserror::Error;

use crate::validation::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(ValidationReport),

    #[error("invalid GT pattern: {0}")]
    InvalidPattern(ValidationReport),

    /// An operation was called outside the domain it is defined on.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("entry {value} at row {row}, column {col} is not an integer")]
    NonInteger { row: usize, col: usize, value: String },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("matrix is not symmetric: |m[{row}][{col}] - m[{col}][{row}]| = {gap:e}")]
    NotSymmetric { row: usize, col: usize, gap: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    /// No rational with a small enough denominator lies within tolerance of
    /// the worst entry.
    #[error(
        "eigensteps are not clearable: entry {value} at row {row}, column {col} \
         is {error:e} away from its best approximation {best} (max denominator {max_den})"
    )]
    NotClearable {
        row: usize,
        col: usize,
        value: f64,
        best: String,
        error: f64,
        max_den: u64,
    },

    #[error("frame is not tight (bounds {lower} and {upper})")]
    NotTight { lower: f64, upper: f64 },

    #[error("complement Gram matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPositiveSemidefinite(f64),

    #[error("parse error: {0}")]
    Parse(String),
}
