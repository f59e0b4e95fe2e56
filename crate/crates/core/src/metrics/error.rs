use std::borrow::Cow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One broken invariant, naming the offending field and the rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Offending field, e.g. `"n4"` or `"sigma2"`.
    pub field: Cow<'static, str>,
    /// The rule that was broken, e.g. `"n4 <= n1"`.
    pub rule: Cow<'static, str>,
    /// Human-readable detail with the observed values.
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} (rule: {})", self.field, self.message, self.rule)
    }
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(Violation::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("invalid metric inputs: {}", join(.0))]
    InvalidInputs(Vec<Violation>),

    #[error("invalid weight vector: {}", join(.0))]
    InvalidWeights(Vec<Violation>),

    #[error("saturating ratio requires a nonnegative finite input, got {0}")]
    NegativeRatioInput(f64),
}

impl MetricsError {
    /// The violations carried by this error, if any.
    pub fn violations(&self) -> &[Violation] {
        match self {
            MetricsError::InvalidInputs(v) | MetricsError::InvalidWeights(v) => v,
            MetricsError::NegativeRatioInput(_) => &[],
        }
    }
}
