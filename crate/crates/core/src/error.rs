use thiserror::Error;

/// Errors raised by every operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph text. `offset` is the byte offset of the offending input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Syntactically valid input describing something that is not a simple graph
    /// (loops, duplicate edges, out-of-range vertices).
    #[error("invalid graph: {0}")]
    Validation(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not a tree")]
    NotATree,

    /// Vertex-to-edge desymmetrisation does not exist in general for bicentred trees.
    #[error("bicentred trees admit no general vertex-to-edge construction")]
    BicentredTreeUnsupported,

    /// A caller broke a documented precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("automorphism group exceeds the enumeration cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("no distinguishing colouring with at most {bound} colours")]
    BoundExceeded { bound: u32 },

    /// Search space larger than the documented guard.
    #[error("instance too large: {0}")]
    TooLarge(String),

    /// A construction failed its own post-verification. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}
