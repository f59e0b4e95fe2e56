use crate::metrics::MetricsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Metrics(#[from] MetricsError),

    #[error("unknown input field {0:?}, expected one of n1..n6")]
    UnknownField(String),

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("comparison needs at least one entry")]
    NoEntries,

    #[error("cannot renormalize all-zero weights")]
    AllZeroWeights,
}
