use thiserror::Error;

/// Errors raised anywhere in the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("order cap exceeded: closure reached {reached} elements (cap {cap})")]
    OrderCapExceeded { cap: usize, reached: usize },

    #[error("subgroup cap exceeded: more than {cap} subgroups")]
    SubgroupCapExceeded { cap: usize },

    #[error("character table limit exceeded: order {order}, {classes} classes (caps {order_cap}, {class_cap})")]
    CharacterTableLimit {
        order: usize,
        classes: usize,
        order_cap: usize,
        class_cap: usize,
    },

    #[error("element set is not a subgroup")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("rejected subgroup: {0}")]
    RejectedSubgroup(&'static str),

    #[error("not a p-element for p = {0}")]
    NotPElement(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("class function values are not integral after division by {0}")]
    NotIntegral(i64),

    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("unknown group label `{0}`")]
    UnknownLabel(String),

    #[error("parameter out of range: {0}")]
    BadParameter(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
