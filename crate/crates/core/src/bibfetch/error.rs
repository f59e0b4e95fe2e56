use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FetchError {
    #[error("invalid provider config: {0}")]
    InvalidConfig(String),

    #[error("transport failure on page {page} after {attempts} attempts: {message}")]
    Transport {
        page: usize,
        attempts: u32,
        message: String,
    },

    #[error("page {page} returned status {status}: {body_excerpt}")]
    Status {
        page: usize,
        status: u16,
        body_excerpt: String,
    },

    #[error("malformed payload on page {page}: {message}")]
    MalformedPage { page: usize, message: String },

    #[error("record is missing required field at {path:?}")]
    MissingField { path: String },

    #[error("field at {path:?} has the wrong shape: expected {expected}")]
    WrongType {
        path: String,
        expected: &'static str,
    },

    #[error("cache {path:?}: {message}")]
    Cache { path: PathBuf, message: String },
}
