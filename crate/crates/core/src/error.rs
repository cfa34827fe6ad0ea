use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("exact division failed: nonzero remainder")]
    NotDivisible,

    #[error("cannot evaluate x{var}^{exponent} at non-unit value {value}")]
    NonUnitAtNegativeExponent { var: u8, exponent: i64, value: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("index {index} is outside the {family} family")]
    IndexOutOfFamily { family: &'static str, index: i64 },

    #[error("unknown export format `{0}` (expected `dot` or `json`)")]
    UnknownFormat(String),

    #[error("more than {limit} perfect matchings")]
    LimitExceeded { limit: usize },

    #[error("graph has {vertices} vertices; the matching engine supports at most {max}")]
    TooManyVertices { vertices: usize, max: usize },

    #[error("ground set of size {0} is too large for exhaustive enumeration")]
    GroundSetTooLarge(u32),

    #[error("unsupported case ({b},{c}): only (2,2) and (1,4) have graph models")]
    UnsupportedCase { b: u32, c: u32 },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
