use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Parameters outside the domain of a constructor or solver.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("coloring has {coloring} entries but the graph has {graph} vertices")]
    ColoringMismatch { graph: usize, coloring: usize },

    #[error("coloring is not proper: edge {{{u}, {v}}} is monochromatic (color {color})")]
    ImproperColoring { u: usize, v: usize, color: i64 },

    #[error("coloring is not {s}-wide: vertices {u} and {v} share color {color} and are joined by a walk of length {len}", len = 2 * .s - 1)]
    NotWide { s: usize, u: usize, v: usize, color: i64 },

    #[error("map is not a homomorphism: edge {{{u}, {v}}} maps to non-edge {{{fu}, {fv}}}")]
    NotHomomorphism { u: usize, v: usize, fu: usize, fv: usize },

    #[error("graph mismatch: {0}")]
    GraphMismatch(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("exact mode refused: {0}")]
    ExactModeRefused(String),

    /// A construction produced an object that failed re-verification.
    #[error("construction failed verification: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
