use thiserror::Error;

/// Errors raised by the algebra and its text front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands have different scalar kinds")]
    KindMismatch,
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("entry count {found} does not match a {rows}x{cols} matrix")]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("{op}: incompatible dimensions {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("row/column ratios differ: {left:?} vs {right:?}")]
    MuMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("operation needs square equivalence classes")]
    NotSquareClass,
    #[error("matrices are not equivalent")]
    NotEquivalent,
    #[error("a {rows}x{cols} matrix cannot be split into {k}x{k} blocks")]
    IndivisibleShape { rows: usize, cols: usize, k: usize },
    #[error("matrix logarithm undefined: eigenvalue {re}{im:+}i on the closed negative real axis")]
    LogDomain { re: String, im: String },
    #[error("operation requires exact rational scalars")]
    NonRational,
    #[error("expected a column vector, got {cols} columns")]
    NotColumn { cols: usize },
    #[error("ratio {mu:?} is not superior to {delta:?}")]
    NotSuperior {
        mu: (usize, usize),
        delta: (usize, usize),
    },
    #[error("leaf {leaf} does not divide {t}")]
    LeafNotDivisible { leaf: usize, t: usize },
    #[error("V_{t} is not an invariant subspace for a {rows}x{cols} matrix")]
    NotInvariantDim { rows: usize, cols: usize, t: usize },
    #[error("operator is unbounded (mu_y = {mu_y})")]
    Unbounded { mu_y: usize },
    #[error("not a permutation matrix")]
    NotPermutationMatrix,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("matrix is singular")]
    Singular,
    #[error("non-finite float value")]
    NonFinite,
    #[error("dimension overflow")]
    Overflow,
    #[error("eigenvalue iteration did not converge")]
    NoConvergence,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable identifier, used on the CLI's stderr and across the C ABI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::KindMismatch => "KIND_MISMATCH",
            Error::EmptyMatrix => "EMPTY_MATRIX",
            Error::EntryCount { .. } => "ENTRY_COUNT",
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::MuMismatch { .. } => "MU_MISMATCH",
            Error::NotSquare { .. } => "NOT_SQUARE",
            Error::NotSquareClass => "NOT_SQUARE_CLASS",
            Error::NotEquivalent => "NOT_EQUIVALENT",
            Error::IndivisibleShape { .. } => "INDIVISIBLE_SHAPE",
            Error::LogDomain { .. } => "LOG_DOMAIN",
            Error::NonRational => "NON_RATIONAL",
            Error::NotColumn { .. } => "NOT_COLUMN",
            Error::NotSuperior { .. } => "NOT_SUPERIOR",
            Error::LeafNotDivisible { .. } => "LEAF_NOT_DIVISIBLE",
            Error::NotInvariantDim { .. } => "NOT_INVARIANT_DIM",
            Error::Unbounded { .. } => "UNBOUNDED",
            Error::NotPermutationMatrix => "NOT_PERMUTATION_MATRIX",
            Error::InvalidPermutation(_) => "INVALID_PERMUTATION",
            Error::Singular => "SINGULAR",
            Error::NonFinite => "NON_FINITE",
            Error::Overflow => "OVERFLOW",
            Error::NoConvergence => "NO_CONVERGENCE",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::RaggedRows { .. } => "RAGGED_ROWS",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
        }
    }

    /// True for errors caused by malformed input text rather than by the algebra.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::RaggedRows { .. } | Error::InvalidArgument(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
