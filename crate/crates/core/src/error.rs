use crate::report::ValidationReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{what} needs level {needed}, but only {available} is available")]
    Truncation {
        what: String,
        needed: usize,
        available: usize,
    },
    #[error("degree {degree} is outside the valid range (bound {bound})")]
    DegreeOutOfRange { degree: usize, bound: isize },
    #[error("not weakly increasing: {0}")]
    NotMonotone(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid {kind}: {report}")]
    Invalid {
        kind: &'static str,
        report: ValidationReport,
    },
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn truncation(what: impl Into<String>, needed: usize, available: usize) -> Self {
        Error::Truncation {
            what: what.into(),
            needed,
            available,
        }
    }

    /// Process exit code: 1 for data that parsed but failed validation,
    /// 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invalid { .. } => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
