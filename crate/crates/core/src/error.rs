use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// A configured size limit (exhaustive search, canonical labeling) was exceeded.
    #[error("capability limit exceeded: {0}")]
    Capability(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}
