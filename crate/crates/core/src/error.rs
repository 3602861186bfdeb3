//! Error type shared by every module, with a stable mapping to process
//! exit codes for the command line front end.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
///
/// Exit code mapping (used by the CLI and the C API):
/// * 2: malformed or out-of-range input,
/// * 3: a mathematical condition fails (the inputs parse but do not
///   satisfy the required relations),
/// * 4: an enumeration bound was exceeded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("input exceeds the supported magnitude: {0}")]
    UnsupportedMagnitude(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("({d}, {m}, {n}) is not a complementary triple")]
    NotComplementary { d: u64, m: u64, n: u64 },

    #[error("relation outside the supported family: {0}")]
    OutsideFamily(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("period matrix violates the positivity conditions: {0}")]
    NotPositive(String),

    #[error("embedding data is inconsistent: {0}")]
    EmbeddingInvalid(String),

    #[error("enumeration bound exceeded: modulus {modulus} needs {required} elements (limit {limit})")]
    EnumerationBound {
        modulus: u64,
        required: u128,
        limit: u128,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn magnitude(msg: impl Into<String>) -> Self {
        Error::UnsupportedMagnitude(msg.into())
    }

    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::UnsupportedMagnitude(_) => 2,
            Error::NoSolution(_)
            | Error::NotComplementary { .. }
            | Error::OutsideFamily(_)
            | Error::Degenerate(_)
            | Error::NotPositive(_)
            | Error::EmbeddingInvalid(_) => 3,
            Error::EnumerationBound { .. } => 4,
        }
    }
}
