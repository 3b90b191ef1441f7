use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (bound {bound})")]
    OutOfRange { index: usize, bound: usize },

    #[error("dimension {dim} exceeds truncation cap {cap}")]
    CapExceeded { dim: usize, cap: usize },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },

    #[error("malformed operation entry: {0}")]
    MalformedEntry(String),

    #[error("missing unit for object `{0}`")]
    MissingUnit(String),

    #[error("differential does not square to zero on hom({from}, {to})")]
    DifferentialNotSquareZero { from: String, to: String },

    #[error("functor is not fully faithful: {0}")]
    NotFullyFaithful(String),

    #[error("missing chain data for subset {0}")]
    MissingData(String),

    #[error("horn index {k} is not inner for dimension {n}")]
    OuterHorn { n: usize, k: usize },

    #[error("input is not a quasi-category: {0}")]
    NotQuasiCategory(String),

    #[error("diagram is not functorial: {0}")]
    NotFunctorial(String),

    #[error("map is not simplicial: {0}")]
    NotSimplicial(String),

    #[error("cocone does not commute with the diagram: {0}")]
    NonCommutingCocone(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
