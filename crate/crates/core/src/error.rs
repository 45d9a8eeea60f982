use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generators have mismatched degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("element is not a member of the group")]
    NotMember,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown catalog group '{0}'")]
    UnknownGroup(String),
    #[error("catalog group {name}: computed order {computed}, expected {expected}")]
    OrderMismatch {
        name: String,
        computed: u128,
        expected: u128,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("character table rejected: {0}")]
    TableRejected(String),
    #[error("transversal violation: {0}")]
    Transversal(String),
    #[error("search limit exceeded: {0}")]
    SearchLimit(String),
    #[error("unknown scenario '{0}'")]
    UnknownScenario(String),
    #[error("matrix error: {0}")]
    Matrix(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
