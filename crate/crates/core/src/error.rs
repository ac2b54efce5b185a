use thiserror::Error;

/// Errors raised by the solvers, checkers and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree `{0}` is outside [0, 1]")]
    DegreeOutOfRange(String),
    #[error("invalid degree literal `{literal}`: {reason}")]
    InvalidDegree { literal: String, reason: &'static str },
    #[error("invalid argument name `{0}`")]
    InvalidArgumentName(String),
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("duplicate attack `{0}` -> `{1}`")]
    DuplicateAttack(String, String),
    #[error("labeling is not total over the system: {0}")]
    LabelingNotTotal(String),
    #[error("{0}")]
    Domain(String),
    #[error("enumeration cap exceeded: {found} arguments, cap is {cap}")]
    CapExceeded { found: usize, cap: usize },
    #[error("result set exceeds {limit} labelings")]
    TooManyResults { limit: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// True for errors caused by enumeration bounds rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::TooManyResults { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
