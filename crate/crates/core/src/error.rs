use std::io;
use std::path::Path;

use thiserror::Error;

/// Errors produced while building samples, scoring, or running evaluations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sample is empty")]
    EmptySample,

    #[error("domain size must be at least 1")]
    ZeroDomain,

    #[error("value {value} at position {index} is outside the domain [0, {domain})")]
    SymbolOutOfRange {
        index: usize,
        value: usize,
        domain: usize,
    },

    #[error("samples have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("enumeration oracle limited to m <= {max_m}, n <= {max_n} (got m = {m}, n = {n})")]
    OracleBound {
        m: usize,
        n: usize,
        max_m: usize,
        max_n: usize,
    },

    #[error("no results to evaluate")]
    EmptyCampaign,

    #[error("decision rate {0} is outside (0, 1]")]
    InvalidRate(f64),

    #[error("unknown cause family `{0}`")]
    UnknownFamily(String),

    #[error("unknown direction `{0}`")]
    UnknownDirection(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("non-finite score: {0}")]
    NonFinite(String),

    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: io::Error,
    },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for failures of the numeric core rather than of the caller's input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::NonFinite(_))
    }
}

/// Attaches the offending path to an I/O error.
pub(crate) fn file_error(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |source| Error::File {
        path: path.display().to_string(),
        source,
    }
}

pub type Result<T> = std::result::Result<T, Error>;
