use crate::metrics::{MetricsError, WeightVector};
use crate::scalar::Real;

use super::error::AnalysisError;

/// Scales the six weights so they sum to 100, leaving thresholds and
/// scales untouched. All-zero weights have no meaningful scale factor.
pub fn renormalize_weights<F: Real>(
    weights: &WeightVector<F>,
) -> Result<WeightVector<F>, AnalysisError> {
    let violations = weights.validate();
    if !violations.is_empty() {
        return Err(MetricsError::InvalidWeights(violations).into());
    }
    let total = weights.total();
    if total == F::zero() {
        return Err(AnalysisError::AllZeroWeights);
    }
    let scale = F::from_literal(100.0) / total;
    let mut out = *weights;
    for w in &mut out.omega {
        *w = *w * scale;
    }
    Ok(out)
}
