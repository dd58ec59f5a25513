use thiserror::Error;

use crate::tameness::TamenessVerdict;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("subspace is not invariant: image of a basis vector leaves it ({witness:?})")]
    NotInvariant { witness: Vec<String> },

    #[error("polynomial is not monic")]
    NonMonic,

    #[error("non-tame generator {index}: characteristic polynomial {}", .verdict.witness.as_ref().map(|w| w.charpoly.to_string()).unwrap_or_default())]
    NonTame {
        index: usize,
        verdict: Box<TamenessVerdict>,
    },

    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),

    #[error("symbol {symbol} out of range for alphabet of size {alphabet}")]
    SymbolOutOfRange { symbol: usize, alphabet: usize },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal consistency check failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
