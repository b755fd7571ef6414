use thiserror::Error;

/// Errors raised by graph construction, spectral routines, and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("invalid vertex subset: {0}")]
    BadSubset(String),

    #[error("graph order {requested} exceeds the supported maximum {max}")]
    OrderTooLarge { requested: u64, max: usize },

    #[error("classification requires a connected graph with at least two vertices")]
    BelowTheoremScope,

    #[error("eigenvalue index {k} out of range 1..={order}")]
    EigenIndexOutOfRange { k: usize, order: usize },

    #[error("Jacobi iteration did not converge")]
    NoConvergence,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("census order {requested} exceeds the cap {cap}")]
    CensusCapExceeded { requested: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
