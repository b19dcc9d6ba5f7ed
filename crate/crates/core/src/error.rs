use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("dimension {requested} exceeds truncation {truncation}")]
    BeyondTruncation { requested: usize, truncation: usize },

    #[error("malformed simplex table: {0}")]
    MalformedTable(String),

    #[error("duplicate label {label} in dimension {dim}")]
    DuplicateLabel { dim: usize, label: String },

    #[error("unknown {dim}-simplex {label}")]
    UnknownSimplex { dim: usize, label: String },

    #[error("map is not injective in dimension {0}")]
    NotInjective(usize),

    #[error("maps do not compose: codomain and domain differ")]
    NotComposable,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid category: {0}")]
    InvalidCategory(String),

    #[error("lifting square does not commute in dimension {dim} at {label}")]
    NonCommutingSquare { dim: usize, label: String },

    #[error("vertex {vertex} is not narrow: it repeats in the {dim}-simplex {witness}")]
    NotNarrow {
        vertex: String,
        dim: usize,
        witness: String,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
