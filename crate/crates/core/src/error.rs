//! Error type shared by every pipeline module.

use thiserror::Error;

/// Errors produced by the pipeline engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("missing artifact: {0}")]
    MissingArtifact(String),

    #[error("integrity check failed for {locator}: expected {expected}, got {actual}")]
    Integrity {
        locator: String,
        expected: String,
        actual: String,
    },

    /// A single transport-level failure. Retryable; the retry policy converts
    /// it into [`Error::BackendUnavailable`] once the budget is exhausted.
    #[error("transient transport failure: {0}")]
    Transport(String),

    #[error("backend unavailable after {attempts} attempt(s): {reason}")]
    BackendUnavailable { attempts: u32, reason: String },

    #[error("protocol error: {0}")]
    Protocol(String),

    #[error("template error: {0}")]
    Template(String),

    #[error("candidate parse error: {0}")]
    CandidateParse(String),

    #[error("selector error: {0}")]
    Selector(String),

    #[error("critique error: {0}")]
    Critique(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("invalid plan: {0}")]
    InvalidPlan(String),

    #[error("invalid record: {0}")]
    InvalidRecord(String),

    #[error("unrecoverable run: {0}")]
    UnrecoverableRun(String),

    #[error("storage error: {0}")]
    Storage(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    /// True for failures of the remote backend itself, as opposed to bad
    /// local input. The CLI maps these to exit code 2.
    pub fn is_backend_failure(&self) -> bool {
        matches!(
            self,
            Error::Transport(_) | Error::BackendUnavailable { .. } | Error::Protocol(_)
        )
    }

    /// True when a retry against the same backend may succeed.
    pub fn is_transient(&self) -> bool {
        matches!(self, Error::Transport(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
