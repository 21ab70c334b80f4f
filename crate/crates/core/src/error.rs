use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// Every variant carries a message naming the violated precondition so that
/// the CLI can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("capacity error: {0}")]
    Capacity(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("unsupported derivative order {requested} (maximum {max})")]
    UnsupportedOrder { requested: usize, max: usize },

    #[error("near-zero value: {0}")]
    NearZero(String),

    #[error("no convergence: {0}")]
    NonConvergence(String),
}

impl Error {
    /// True for failures of the numerics rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NearZero(_) | Error::NonConvergence(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
