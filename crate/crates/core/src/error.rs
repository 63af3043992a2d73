use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in this crate.
///
/// Errors fall into three groups, see [`Error::kind`]: malformed input,
/// an unmet precondition of an otherwise well-formed request, and a failed
/// invariant that the underlying theory guarantees. The last group always
/// indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("ranks {0:?} are not a bijection onto 1..=n")]
    NotABijection(Vec<usize>),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("digraph contains a directed cycle")]
    Cyclic,
    #[error("not an acyclic ordering: arc ({0}, {1}) is ranked backwards")]
    InvalidOrdering(usize, usize),
    #[error("digraph has no arcs")]
    NoArcs,
    #[error("refusing to search: {n} vertices exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("property violation: {0}")]
    PropertyViolation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Precondition,
    PropertyViolation,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::VertexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::DuplicateArc(..)
            | Error::LengthMismatch { .. }
            | Error::NotABijection(_)
            | Error::Parse { .. }
            | Error::InvalidParam(_) => ErrorKind::Input,
            Error::Cyclic
            | Error::InvalidOrdering(..)
            | Error::NoArcs
            | Error::CapExceeded { .. }
            | Error::Precondition(_) => ErrorKind::Precondition,
            Error::PropertyViolation(_) => ErrorKind::PropertyViolation,
        }
    }
}
