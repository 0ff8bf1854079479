use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("root index j = {j} outside 1..={s}")]
    RootIndex { j: u32, s: u32 },

    #[error("cyclotomic order must be at least 2, got {0}")]
    CyclotomicOrder(u32),

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("monomial has {got} exponents, polynomial has {expected} variables")]
    MonomialLength { expected: usize, got: usize },

    #[error("series constant term is not a unit")]
    NonUnitConstant,

    #[error("series truncation orders differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("scaled power sum is undefined at k = 0")]
    PowerSumIndexZero,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("invalid parameters for `{id}`: {reason}")]
    InvalidParams { id: String, reason: String },

    #[error("malformed JSON value: {0}")]
    Json(String),

    #[error("{0}")]
    Csv(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
