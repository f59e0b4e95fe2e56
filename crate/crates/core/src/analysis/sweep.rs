//! One-dimensional sensitivity sweeps over a single input field.

use serde::{Deserialize, Serialize};

use crate::metrics::{a_index, IndexReport, MetricInputs, Violation, WeightVector};
use crate::scalar::Real;

use super::error::AnalysisError;
use super::field::InputField;

/// One evaluated sweep point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint<F: Real = f64> {
    pub value: u64,
    pub report: IndexReport<F>,
}

/// A substituted value that failed input validation, with the rules it broke.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RejectedPoint {
    pub value: u64,
    pub violations: Vec<Violation>,
}

/// Result of sweeping one field: evaluated points sorted by field value,
/// plus the values that produced inconsistent inputs. A partial series is
/// still usable for plotting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSeries<F: Real = f64> {
    pub field: InputField,
    pub base: MetricInputs,
    pub weights: WeightVector<F>,
    pub points: Vec<SweepPoint<F>>,
    pub rejected: Vec<RejectedPoint>,
}

/// Evaluates the index at each substituted value of `field`, holding every
/// other input at `base`.
///
/// Values are deduplicated and the series is ordered by field value. Points
/// whose substitution breaks an input consistency rule are reported in
/// `rejected` instead of failing the whole sweep. Invalid weights fail
/// immediately: no point could be evaluated under them.
pub fn sweep<F: Real>(
    base: &MetricInputs,
    field: InputField,
    values: &[u64],
    weights: &WeightVector<F>,
) -> Result<SweepSeries<F>, AnalysisError> {
    let weight_violations = weights.validate();
    if !weight_violations.is_empty() {
        return Err(crate::metrics::MetricsError::InvalidWeights(weight_violations).into());
    }

    let mut ordered = values.to_vec();
    ordered.sort_unstable();
    ordered.dedup();

    let mut points = Vec::new();
    let mut rejected = Vec::new();
    for value in ordered {
        let inputs = field.substitute(base, value);
        let violations = crate::metrics::validate_inputs(&inputs);
        if violations.is_empty() {
            let report = a_index(&inputs, weights).map_err(AnalysisError::Metrics)?;
            points.push(SweepPoint { value, report });
        } else {
            rejected.push(RejectedPoint { value, violations });
        }
    }

    Ok(SweepSeries {
        field,
        base: *base,
        weights: *weights,
        points,
        rejected,
    })
}
