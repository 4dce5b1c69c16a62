use thiserror::Error;

/// Errors raised by the sequence algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    ParseRational(String),

    #[error("malformed polynomial {text:?}: {reason}")]
    ParsePolynomial { text: String, reason: String },

    #[error("malformed recurrence {text:?}: {reason}")]
    ParseRecurrence { text: String, reason: String },

    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(String),

    #[error("degenerate operator: h = 0 collapses the degree of the recurrence")]
    DegenerateDegree,

    #[error("operator with h = 0 is not invertible")]
    NotInvertible,

    #[error("1 - h is zero, no geometric fixed sequence exists")]
    UnitScale,

    #[error("sequence prefix must contain at least one term")]
    EmptySequence,

    #[error("right shift of a one-term prefix leaves nothing")]
    EmptyShift,

    #[error("recurrence of order {order} needs {order} initial terms, got {given}")]
    InitialLength { order: usize, given: usize },

    #[error("recurrence order must be at least 1")]
    ZeroOrder,

    #[error("invalid degree-2 spec: {0}")]
    InvalidSpec(String),

    #[error("decimation step must be at least 1")]
    ZeroStep,

    #[error("unknown key {0:?}")]
    UnknownKey(String),

    #[error("count must be at least 1")]
    ZeroCount,

    #[error("{0}")]
    Interchange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
