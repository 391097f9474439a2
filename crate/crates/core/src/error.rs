use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("group order exceeds the order cap of {cap}")]
    OrderCap { cap: usize },

    #[error("group of order {order} exceeds the lattice cap of {cap}")]
    LatticeCap { order: usize, cap: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("not a p-group")]
    NotPGroup,

    #[error("{value} is not a power of {p}")]
    NotPrimePower { value: usize, p: usize },

    #[error("generator images do not define an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("action does not respect the relations of the acting group")]
    RelationViolation,

    #[error("Cayley table is not a group: {0}")]
    InvalidTable(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("closure has order {actual}, file expects {expected}")]
    OrderMismatch { expected: usize, actual: usize },

    #[error("malformed parameters: {0}")]
    MalformedParams(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::OrderCap { .. } | Error::LatticeCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
