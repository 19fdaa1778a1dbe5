//! Library-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug)]
pub enum Error {
    /// A tunable was outside its documented range or otherwise unusable.
    InvalidParameter {
        name: &'static str,
        reason: String,
    },
    /// A function name did not match `f1..f5` or a known long name.
    UnknownFunction {
        name: String,
    },
    /// An input vector did not match the objective's dimension.
    DimensionMismatch {
        expected: usize,
        actual: usize,
    },
    /// An input coordinate was NaN or infinite.
    NonFiniteInput {
        index: usize,
    },
    /// A `DE/<base>/<k>/<crossover>` string could not be parsed.
    MalformedStrategy {
        input: String,
        reason: String,
    },
    /// The strategy parsed but is not executable by this library.
    UnsupportedStrategy {
        strategy: String,
    },
    /// Too few candidates for the differential mutation donors.
    PopulationTooSmall {
        required: usize,
        actual: usize,
    },
    /// Statistics were requested over zero runs.
    EmptyBatch,
    /// A requested dimension has no generation budget.
    MissingBudget {
        dimension: usize,
    },
    /// A summary needed for output was not produced by the experiment.
    MissingCell {
        detail: String,
    },
    /// Configuration file problem (syntax, unknown key, bad value).
    Config {
        line: usize,
        reason: String,
    },
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { name, reason } => {
                write!(f, "invalid parameter `{name}`: {reason}")
            }
            Error::UnknownFunction { name } => write!(f, "unknown benchmark function `{name}`"),
            Error::DimensionMismatch { expected, actual } => {
                write!(
                    f,
                    "dimension mismatch: expected {expected} coordinates, got {actual}"
                )
            }
            Error::NonFiniteInput { index } => {
                write!(f, "non-finite input at coordinate {index}")
            }
            Error::MalformedStrategy { input, reason } => {
                write!(f, "malformed strategy `{input}`: {reason}")
            }
            Error::UnsupportedStrategy { strategy } => {
                write!(
                    f,
                    "strategy `{strategy}` is not supported; only DE/rand/1/bin runs"
                )
            }
            Error::PopulationTooSmall { required, actual } => {
                write!(
                    f,
                    "population of {actual} is too small, need at least {required}"
                )
            }
            Error::EmptyBatch => write!(f, "cannot summarize an empty batch of runs"),
            Error::MissingBudget { dimension } => {
                write!(
                    f,
                    "no generation budget for dimension {dimension}; pass --generations"
                )
            }
            Error::MissingCell { detail } => write!(f, "missing result cell: {detail}"),
            Error::Config { line, reason } => write!(f, "config error on line {line}: {reason}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
