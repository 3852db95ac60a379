use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must contain at least one object")]
    EmptyUniverse,

    #[error("at least one positive/negative parameter pair is required")]
    EmptyParameters,

    #[error("duplicate object identifier `{0}`")]
    DuplicateObject(String),

    /// Repeated within E1, within E2, or shared between E1 and E2.
    #[error("duplicate parameter identifier `{0}`")]
    DuplicateParameter(String),

    #[error("parameter `{0}` is assigned more than once")]
    DuplicateAssignment(String),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown positive parameter `{0}`")]
    UnknownParameter(String),

    #[error("parameter `{param}`: positive and negative sets overlap on {}", witnesses.join(", "))]
    DisjointnessViolation { param: String, witnesses: Vec<String> },

    #[error("operands live over different parameter spaces")]
    SpaceMismatch,

    #[error("table dimensions do not match: {0}")]
    DimensionMismatch(String),

    #[error("table labels do not match the parameter space: {0}")]
    LabelMismatch(String),

    #[error("invalid cell ({0},{1}): expected one of (1,0), (0,1), (0,0)")]
    InvalidCell(u8, u8),

    #[error("invalid cell text `{0}`")]
    InvalidCellText(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("bounds too large: {0}")]
    BoundsTooLarge(String),

    #[error("unknown law `{0}`")]
    UnknownLaw(String),
}

impl Error {
    pub(crate) fn from_json(err: &serde_json::Error) -> Self {
        Error::Parse {
            line: err.line(),
            column: err.column(),
            message: strip_location(&err.to_string()),
        }
    }

    /// True for errors caused by malformed input rather than a violated domain rule.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

fn strip_location(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(idx) => message[..idx].to_string(),
        None => message.to_string(),
    }
}
