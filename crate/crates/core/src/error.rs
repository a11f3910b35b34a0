use thiserror::Error;

/// Errors produced by automaton constructions, checks and file handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied value is outside the accepted domain.
    #[error("invalid input: {0}")]
    Input(String),

    /// A construction would exceed a configured budget.
    #[error("budget `{budget}` exceeded (limit {limit}, reached {reached})")]
    Resource {
        budget: &'static str,
        limit: usize,
        reached: usize,
    },

    /// A certificate or lower-bound argument failed to check.
    #[error("verification failed: {0}")]
    Verification(String),

    /// Malformed automaton text.
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// An automaton claimed to be deterministic is not.
    #[error("not deterministic: {0}")]
    Determinism(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
