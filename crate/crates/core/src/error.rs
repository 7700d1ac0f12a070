use thiserror::Error;

/// Errors produced by the library. Refutations (a property that does not
/// hold, a check that fails) are ordinary return values, never errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RaagError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: String,
        actual: usize,
        limit: usize,
    },

    #[error("routes disagree on {property}: paper route says {paper}, oracle route says {oracle}")]
    RouteDisagreement {
        property: String,
        paper: String,
        oracle: String,
    },
}

impl RaagError {
    pub(crate) fn capacity(what: impl Into<String>, actual: usize, limit: usize) -> Self {
        RaagError::Capacity {
            what: what.into(),
            actual,
            limit,
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        RaagError::Precondition(msg.into())
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, RaagError::Capacity { .. })
    }
}

pub type Result<T, E = RaagError> = std::result::Result<T, E>;
