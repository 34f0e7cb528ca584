use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("capacity exceeded for {what}: {found} > {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        found: usize,
    },

    #[error("vertex {vertex} out of range for a complex on {m} vertices")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("complex is not pure")]
    NotPure,

    #[error("{0}")]
    InvalidInput(String),

    #[error("invalid characteristic map: {0}")]
    InvalidCharacteristicMap(String),

    #[error("normal form needs even polygon sizes >= 4, got ({0}, {1})")]
    OddFactor(usize, usize),

    #[error("complex is not the dual of a product of two polygons")]
    NotPolygonProduct,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("cocycle evaluates to zero on every cycle")]
    DegenerateCocycle,

    #[error("fibering certificate inconclusive: {0}")]
    Inconclusive(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
