use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter `{0}` is not in the declared alphabet")]
    Alphabet(char),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("factorization does not multiply back to {0}")]
    FactorizationIntegrity(String),

    #[error("no nice factorization available for {0}")]
    Niceness(String),

    #[error("arity mismatch: term expects {expected} constants, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("relation is not a congruence: {0}")]
    Congruence(String),

    #[error("invalid instance: {0}")]
    Instance(String),

    #[error("sigma is undecidable for this instance without an override")]
    Undecidable,

    #[error("range has no greatest element: {0}")]
    NoGreatestElement(String),

    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
