//! Crate-wide error type.

use std::path::PathBuf;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// A file failed to parse; `location` is a human-readable position
    /// (line number, channel/sample index, byte offset).
    #[error("parse error in {path}: {location}: {message}")]
    Parse {
        path: PathBuf,
        location: String,
        message: String,
    },

    /// A configuration value or invariant check failed before any work started.
    #[error("invalid configuration: {0}")]
    Invalid(String),

    #[error("band '{band}' exceeds Nyquist: high edge {high_hz} Hz > {nyquist_hz} Hz")]
    BandExceedsNyquist {
        band: String,
        high_hz: f64,
        nyquist_hz: f64,
    },

    #[error("signal too short for stable filtering: {actual} samples, need at least {required}")]
    SignalTooShort { required: usize, actual: usize },

    #[error("series length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("window [{start}, {end}) out of range for {len} samples")]
    WindowOutOfRange {
        start: usize,
        end: usize,
        len: usize,
    },

    #[error("electrode orderings cover different label sets: {0}")]
    LabelSetMismatch(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("missing session for participant {participant} trial {trial}")]
    MissingSession { participant: u32, trial: u32 },

    #[error("empty evaluation set")]
    EmptyEvaluationSet,

    #[error("training diverged (non-finite loss) after {retries} retries")]
    Divergence { retries: u32 },
}

impl Error {
    pub fn parse(path: impl Into<PathBuf>, location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            location: location.into(),
            message: message.into(),
        }
    }
}
