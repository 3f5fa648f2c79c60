use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the domain of the operation (n = 0, alpha < 2, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A multiplication table that does not define a group.
    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("cannot parse group spec `{spec}`: {reason}")]
    GroupSpec { spec: String, reason: String },

    /// A characteristic-polynomial operation whose exactness precondition failed.
    #[error("characteristic polynomial contradiction: {0}")]
    Contradiction(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
