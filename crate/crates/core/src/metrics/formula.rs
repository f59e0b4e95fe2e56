//! The saturating component terms and the composite index itself.
//!
//! Every component shares the factor `x / (1 + x)`: strictly increasing in
//! `x`, zero at zero, and approaching 1 from below. Count components feed
//! the count in directly; citation components first shift and scale the
//! count by a (threshold, scale) pair so that small citation totals
//! contribute nothing.

use super::error::MetricsError;
use super::inputs::{validate_inputs, MetricInputs};
use super::report::IndexReport;
use super::weights::WeightVector;
use crate::scalar::Real;

/// The common saturating factor `x / (1 + x)`, defined for `x >= 0`.
///
/// Strictly increasing and bounded below 1; rejects negative or non-finite
/// input.
pub fn saturating_ratio<F: Real>(x: F) -> Result<F, MetricsError> {
    if x < F::zero() || !x.is_finite() {
        return Err(MetricsError::NegativeRatioInput(
            x.to_f64().unwrap_or(f64::NAN),
        ));
    }
    Ok(ratio(x))
}

/// `x / (1 + x)` without the nonnegativity check; callers clamp first.
fn ratio<F: Real>(x: F) -> F {
    x / (F::one() + x)
}

/// Weighted saturating term on a plain count: `w * n / (n + 1)`.
///
/// Used for the paper-count, h-index and single-author components.
pub fn mu_linear<F: Real>(n: u64, weight: F) -> F {
    weight * ratio(F::from_count(n))
}

/// Weighted saturating term on a thresholded count:
/// `w * x / (1 + x)` with `x = max(0, (n - tau) / sigma)`.
///
/// Zero for every `n <= tau`; used for the two citation-total components.
pub fn mu_thresholded<F: Real>(n: u64, tau: F, sigma: F, weight: F) -> F {
    let x = ((F::from_count(n) - tau) / sigma).max(F::zero());
    weight * ratio(x)
}

/// Percentage transform of an h-index: `h / (h + 1) * 100`.
///
/// Strictly increasing in `h` and bounded below 100.
pub fn asf<F: Real>(h: u64) -> F {
    ratio(F::from_count(h)) * F::from_literal(100.0)
}

/// Evaluates the six weighted components and their sum.
///
/// Components 1, 3, 4 and 6 are plain saturating terms on `n1`, `n3`, `n4`
/// and `n6`; components 2 and 5 are thresholded terms on the citation
/// totals `n2` and `n5`. Inputs and weights are validated first and any
/// broken invariant is reported with its offending field.
pub fn a_index<F: Real>(
    inputs: &MetricInputs,
    weights: &WeightVector<F>,
) -> Result<IndexReport<F>, MetricsError> {
    let input_violations = validate_inputs(inputs);
    if !input_violations.is_empty() {
        return Err(MetricsError::InvalidInputs(input_violations));
    }
    let weight_violations = weights.validate();
    if !weight_violations.is_empty() {
        return Err(MetricsError::InvalidWeights(weight_violations));
    }

    let mu = [
        mu_linear(inputs.n1, weights.omega[0]),
        mu_thresholded(inputs.n2, weights.tau2, weights.sigma2, weights.omega[1]),
        mu_linear(inputs.n3, weights.omega[2]),
        mu_linear(inputs.n4, weights.omega[3]),
        mu_thresholded(inputs.n5, weights.tau5, weights.sigma5, weights.omega[4]),
        mu_linear(inputs.n6, weights.omega[5]),
    ];

    Ok(IndexReport::new(*inputs, *weights, mu))
}
