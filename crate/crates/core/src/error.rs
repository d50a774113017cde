use thiserror::Error;

use crate::multivector::BasisTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expected a {expected}-basis multivector, got {found}")]
    TagMismatch { expected: BasisTag, found: BasisTag },

    #[error("index {index} out of range 1..{n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension {n} out of range 1..{max}")]
    DimensionOutOfRange { n: usize, max: usize },

    #[error("unknown metric {k}: the algebra has {count} metric(s)")]
    UnknownMetric { k: usize, count: usize },

    #[error("rank {k} out of range 0..{n}")]
    RankOutOfRange { k: usize, n: usize },

    #[error("word is not strictly ascending")]
    NotAscending,

    #[error("word of length {len} exceeds the alternation bound {max}")]
    WordTooLong { len: usize, max: usize },

    #[error("metric is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("metric is degenerate (determinant is zero)")]
    Degenerate,

    #[error("metric has {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("metric entries must be real")]
    ComplexMetric,

    #[error("invalid scalar {0:?}")]
    InvalidScalar(String),
}
