use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the library. `Internal` and `NotCirculant` indicate a
/// broken invariant rather than bad input; callers map them to distinct exit
/// codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("universe size {0} outside supported range 1..=128")]
    Universe(u32),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("index {index} out of range for universe {universe}")]
    IndexOutOfRange { index: u32, universe: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cannot parse rational: {0}")]
    ParseRational(String),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("contraction is not circulant under the natural column order: {0}")]
    NotCirculant(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
