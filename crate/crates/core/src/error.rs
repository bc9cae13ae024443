use std::path::PathBuf;

/// Errors raised across the library.
///
/// A failed numerical check is not an error: verifiers return reports.
/// Errors are reserved for inputs that cannot be evaluated at all.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("fusion coefficient N[{i}][{j}]^{k} = {value} is not a non-negative integer")]
    FusionIntegrality { i: usize, j: usize, k: usize, value: String },

    #[error("S^2 is not a permutation matrix (residual {residual:.3e})")]
    Conjugation { residual: f64 },

    #[error("degenerate data: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("invalid generator parameters: {0}")]
    Generator(String),

    #[error("structural error: {0}")]
    Structure(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
