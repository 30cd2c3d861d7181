use thiserror::Error;

/// Errors raised by the library. Every variant corresponds to a distinct,
/// machine-readable failure; [`Error::code`] gives the stable code used by
/// the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("elements belong to different algebras")]
    OwnerMismatch,
    #[error("resource bound exceeded: {needed} basis elements requested, cap is {cap}")]
    ResourceBound { needed: u64, cap: u64 },
    #[error("malformed transform: {0}")]
    MalformedTransform(String),
    #[error("too many relators: {m} relators for {n} generators (need m <= n - 1)")]
    TooManyRelators { n: usize, m: usize },
    #[error("hypothesis failed: {m} relators for {n} generators (need m <= n - 2)")]
    HypothesisFailed { n: usize, m: usize },
    #[error("element is not in the ideal")]
    NotInIdeal,
    #[error("the given elements together with the ideal do not span the algebra")]
    SpanningFailure,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("no zero p-power found within {cap} iterations")]
    IterationBoundExceeded { cap: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::InvalidField(_) => "InvalidField",
            Error::Parse { .. } => "ParseError",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::OwnerMismatch => "OwnerMismatch",
            Error::ResourceBound { .. } => "ResourceBound",
            Error::MalformedTransform(_) => "MalformedTransform",
            Error::TooManyRelators { .. } => "TooManyRelators",
            Error::HypothesisFailed { .. } => "HypothesisFailed",
            Error::NotInIdeal => "NotInIdeal",
            Error::SpanningFailure => "SpanningFailure",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::IterationBoundExceeded { .. } => "IterationBoundExceeded",
            Error::Invalid(_) => "InvalidInput",
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
