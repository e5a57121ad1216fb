use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Fixed-width integer arithmetic left the `i64` range. Exact results of
    /// that size are only available through [`crate::charpoly_exact`] and
    /// [`crate::BigPoly`].
    #[error("integer overflow in {op}; retry through the arbitrary-precision path")]
    Overflow { op: &'static str },

    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("{what} is not a magic square")]
    NotMagic { what: String },

    #[error("{what} is not a regular magic square")]
    NotRegular { what: String },

    #[error("subsquare grid is inconsistent: {0}")]
    InconsistentGrid(String),

    #[error("{what} failed verification (residual {residual:.3e})")]
    Unverified { what: String, residual: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("unknown fixture {name:?}; available: {}", available.join(", "))]
    UnknownFixture {
        name: String,
        available: Vec<&'static str>,
    },
}
