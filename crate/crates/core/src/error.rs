use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("number of categories must be at least 1")]
    EmptyCategorySpace,
    #[error("duplicate category label `{0}`")]
    DuplicateLabel(String),
    #[error("category index {index} is outside 1..={k}")]
    InvalidCategory { index: usize, k: usize },
    #[error("tail counting vector must be non-increasing and nonnegative: {0:?}")]
    InvalidTailVector(Vec<u64>),
    #[error("head counting vector must be non-decreasing: {0:?}")]
    InvalidHeadVector(Vec<u64>),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("numerical representation must be strictly increasing: {0:?}")]
    InvalidRepresentation(Vec<u64>),
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("point set is empty")]
    EmptySet,
    #[error("point {0} is dominated in the given set")]
    NotNonDominated(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("{what} has size {size}, above the enumeration limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("oracle inconsistency: {0}")]
    OracleInconsistency(String),
}

impl Error {
    pub(crate) fn parse(line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            reason: reason.into(),
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
