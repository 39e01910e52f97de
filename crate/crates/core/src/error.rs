use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A vector or matrix had the wrong length for the ambient lattice.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An operation received a degenerate value it excludes (e.g. the
    /// trivial one-parameter subgroup where a ray is required).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Invalid group family / rank combination or other construction error.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// A configured cap (Weyl group order, enumeration box) was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Input outside the supported class (e.g. Hilbert basis of a
    /// non-pointed cone).
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// Inconsistent data supplied to a constructor (state/cone mismatch,
    /// invalid representation support, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// The datum fails the classification criteria for an embedding.
    #[error("classification error: {0}")]
    Classification(String),

    /// A precondition of a higher-level check does not hold.
    #[error("precondition not met: {0}")]
    Precondition(String),
}
