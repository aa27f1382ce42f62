use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller supplied a value outside an operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Physical error rate at or above the surface-code threshold; the
    /// logical error fit diverges there.
    #[error("physical error rate {0} is at or above the 1% threshold")]
    AboveThreshold(f64),

    /// The configuration admits no feasible run (e.g. the runtime cap is
    /// below a single Grover iteration).
    #[error("infeasible configuration: {0}")]
    Infeasible(String),

    /// State-vector simulation requested beyond the supported register size.
    #[error("simulation capacity exceeded: {0}")]
    Capacity(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
