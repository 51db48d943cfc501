use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated a documented precondition or hypothesis.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The instance is larger than the configured exhaustive-search budget.
    #[error("{what}: size {size} exceeds budget {limit}")]
    Budget {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// Branch-and-bound ran out of nodes before proving optimality.
    #[error("search budget exhausted after {nodes} nodes (best bounds {lower}..={upper})")]
    SearchExhausted {
        nodes: u64,
        lower: usize,
        upper: usize,
    },

    /// Malformed graph6 input.
    #[error("graph6 parse error: {0}")]
    Parse(String),

    /// A constructive procedure could not complete on an instance that
    /// passed its hypothesis checks.
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
