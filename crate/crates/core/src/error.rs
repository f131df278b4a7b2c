use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operands belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },

    #[error("invalid field spec `{spec}`: {reason}")]
    InvalidFieldSpec { spec: String, reason: String },

    #[error("invalid literal `{literal}` for field {field}")]
    InvalidLiteral { literal: String, field: String },

    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),

    #[error("the two lines coincide")]
    SameLine,

    #[error("hypotheses violated: {}", .0.join("; "))]
    HypothesisViolated(Vec<String>),

    #[error("point is not on the source line")]
    NotOnSource,

    #[error("projection direction is parallel to the target line")]
    BadDirection,

    #[error("auxiliary point lies on the line OI")]
    AuxOnLine,

    #[error("auxiliary point is degenerate for this construction: {0}")]
    DegenerateAux(String),

    #[error("ratio is undefined (0/0 configuration)")]
    UndefinedRatio,

    #[error("the infinite point cannot be used here")]
    InfiniteInput,

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("`{0}` is not a generator of the polygon")]
    NotAGenerator(String),

    #[error("words are over different bases")]
    BasisMismatch,

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("trace does not replay: {0}")]
    InvalidTrace(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable variant name, used in machine-readable error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch { .. } => "FieldMismatch",
            Error::InvalidFieldSpec { .. } => "InvalidFieldSpec",
            Error::InvalidLiteral { .. } => "InvalidLiteral",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::SameLine => "SameLine",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::NotOnSource => "NotOnSource",
            Error::BadDirection => "BadDirection",
            Error::AuxOnLine => "AuxOnLine",
            Error::DegenerateAux(_) => "DegenerateAux",
            Error::UndefinedRatio => "UndefinedRatio",
            Error::InfiniteInput => "InfiniteInput",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::NotAGenerator(_) => "NotAGenerator",
            Error::BasisMismatch => "BasisMismatch",
            Error::InvalidPolygon(_) => "InvalidPolygon",
            Error::InvalidTrace(_) => "InvalidTrace",
            Error::Json(_) => "Json",
        }
    }

    /// Errors caused by malformed user input rather than by mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidFieldSpec { .. } | Error::InvalidLiteral { .. } | Error::Json(_)
        )
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
