use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix dimensions incompatible with the requested operation.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Text input (code file, circuit string, ...) could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A stabiliser code failed its defining constraints.
    #[error("invalid code: {0}")]
    InvalidCode(String),

    /// An operation that expects an automorphism of the code got something else.
    #[error("operator is not an automorphism of the code")]
    NotAutomorphism,

    /// A binary matrix that should preserve the symplectic form does not.
    #[error("matrix is not symplectic")]
    NotSymplectic,

    /// A monomial operator description is malformed.
    #[error("invalid monomial operator: {0}")]
    InvalidMonomial(String),

    /// Search exceeded its configured budget.
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Requested built-in code does not exist.
    #[error("unknown built-in code `{0}`")]
    UnknownBuiltin(String),

    /// Requested conjugacy class is out of range or not realised.
    #[error("conjugacy class {0}: {1}")]
    BadClass(usize, String),

    /// No conjugating element exists between the two given matrices.
    #[error("matrices are not conjugate under the basis-change action")]
    NotConjugate,

    /// Verification of an optimisation result failed.
    #[error("verification failed: {0}")]
    Verification(String),

    /// Underlying I/O failure (CLI file handling).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialisation failure (CLI).
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
