use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {message}")]
    MalformedRow { line: u64, message: String },

    #[error("{path}: {message}")]
    MalformedDocument { path: String, message: String },

    #[error("input is not valid UTF-8: {0}")]
    Encoding(#[from] std::str::Utf8Error),

    #[error("unknown corpus format {0:?} (expected \"csv\" or \"json\")")]
    UnknownFormat(String),

    #[error("author name is empty after normalization")]
    EmptyAuthor,

    #[error("cannot serialize to CSV: author name {0:?} contains the '|' separator")]
    UnserializableAuthor(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
