use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("polytope is {actual}-dimensional, expected full dimension {ambient}")]
    NotFullDimensional { actual: usize, ambient: usize },

    #[error("zero direction vector")]
    ZeroVector,

    #[error("generator {0:?} is not primitive")]
    NonPrimitive(Vec<i64>),

    #[error("generators {0:?} and {1:?} are antipodal")]
    AntipodalPair(Vec<i64>, Vec<i64>),

    #[error("generator {0:?} is listed twice")]
    DuplicateGenerator(Vec<i64>),

    #[error("generators span a rank-{rank} subspace of R^{dim}")]
    RankDeficient { rank: usize, dim: usize },

    #[error("dimension must be at least {min}, got {dim}")]
    BadDimension { dim: usize, min: usize },

    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("vertex {0} is not a lattice point")]
    NonIntegerVertex(String),

    #[error("polytope has no facet description")]
    MissingFacets,

    #[error("non-positive parameter: {0}")]
    NonPositive(String),

    #[error("parameters must be strictly increasing")]
    NotIncreasing,

    #[error("section at level {level} is empty (support value {support})")]
    EmptySection { level: String, support: String },

    #[error("enumeration of {estimate} candidates exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown graph {0:?}")]
    UnknownGraph(String),

    #[error("scale {0} leaves only the origin")]
    DegenerateScale(String),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
