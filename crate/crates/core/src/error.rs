use thiserror::Error;

/// Failures raised by interval operations and the bound computations built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval bounds [{lo}, {hi}]")]
    InvalidBounds { lo: f64, hi: f64 },

    #[error("non-finite endpoint in interval construction")]
    NonFinite,

    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("argument out of range for {op}: {detail}")]
    Range { op: &'static str, detail: String },

    #[error("cannot parse decimal literal {0:?}")]
    ParseDecimal(String),

    #[error("invalid precision setting: {0}")]
    Precision(String),

    #[error("malformed certificate: {0}")]
    Certificate(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn range(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Range {
            op,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
