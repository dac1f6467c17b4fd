use thiserror::Error;

use crate::digraph::Refusal;
use crate::srm::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column (got {rows}x{cols})")]
    EmptyShape { rows: usize, cols: usize },

    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {got}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },

    #[error("entry {value} at ({row},{col}) is outside {{-1,0,1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },

    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("not a sign-restricted matrix: {0}")]
    NotSrm(Violation),

    #[error("matrix contains a -1 at ({row},{col})")]
    HasNegativeEntry { row: usize, col: usize },

    #[error("matrix class has {cells} cells, above the enumeration cap of {cap}")]
    CapExceeded { cells: usize, cap: usize },

    #[error("margins are not realizable: {0}")]
    UnrealizableMargins(String),

    #[error("margin vectors disagree: {0}")]
    MarginMismatch(String),

    #[error("row sum total {row_total} differs from column sum total {col_total}")]
    SumMismatch { row_total: i64, col_total: i64 },

    #[error("subset chain is not monotone at position {index}")]
    NonMonotoneChain { index: usize },

    #[error("column count {0} exceeds the 63-column multichain limit")]
    ChainTooWide(usize),

    #[error("invalid interchange: {0}")]
    InvalidInterchange(String),

    #[error("matrix class is empty")]
    EmptyClass,

    #[error("matrices are not comparable in the Bruhat order")]
    NotComparable,

    #[error("invalid Bruhat operation: {0}")]
    InvalidBruhatOp(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("digraph has no edges")]
    Edgeless,

    #[error("invalid digraph: {0}")]
    InvalidDigraph(String),

    #[error("digraph cannot be ordered into a sign-restricted matrix: {0}")]
    NotOrderable(Refusal),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("matrix is not a member of the polytope: {0}")]
    NotMember(String),

    #[error("joint-realization hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant failed: {0}")]
    Internal(String),
}
