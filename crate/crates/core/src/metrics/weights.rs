use serde::{Deserialize, Serialize};

use super::error::Violation;
use crate::scalar::Real;

/// Default weights for the six components; they sum to 100.
pub const DEFAULT_WEIGHTS: [f64; 6] = [20.0, 10.0, 14.0, 14.0, 12.0, 30.0];
/// Default citation threshold and scale for the total-citations component.
pub const DEFAULT_TAU2: f64 = 100.0;
pub const DEFAULT_SIGMA2: f64 = 200.0;
/// Default citation threshold and scale for the single-author-citations component.
pub const DEFAULT_TAU5: f64 = 70.0;
pub const DEFAULT_SIGMA5: f64 = 50.0;

/// The six component weights plus the two (threshold, scale) pairs.
///
/// `omega[i]` weights component `i + 1`. The thresholded components keep
/// their citation counts inert until the count clears `tau`, then grow on
/// the scale `sigma`. All of these are configuration: evaluations with a
/// different purpose may reweight freely.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct WeightVector<F: Real = f64> {
    pub omega: [F; 6],
    pub tau2: F,
    pub sigma2: F,
    pub tau5: F,
    pub sigma5: F,
}

impl<F: Real> Default for WeightVector<F> {
    fn default() -> Self {
        Self {
            omega: DEFAULT_WEIGHTS.map(F::from_literal),
            tau2: F::from_literal(DEFAULT_TAU2),
            sigma2: F::from_literal(DEFAULT_SIGMA2),
            tau5: F::from_literal(DEFAULT_TAU5),
            sigma5: F::from_literal(DEFAULT_SIGMA5),
        }
    }
}

impl<F: Real> WeightVector<F> {
    /// Default weights with the six omegas replaced.
    pub fn with_omega(omega: [F; 6]) -> Self {
        Self {
            omega,
            ..Self::default()
        }
    }

    /// Sum of the six component weights, the upper bound of the raw index.
    pub fn total(&self) -> F {
        self.omega.iter().fold(F::zero(), |acc, &w| acc + w)
    }

    /// Checks the weight invariants; empty result means all hold.
    pub fn validate(&self) -> Vec<Violation> {
        const FIELDS: [&str; 6] = ["w1", "w2", "w3", "w4", "w5", "w6"];
        let mut violations = Vec::new();

        for (i, &w) in self.omega.iter().enumerate() {
            if !(w >= F::zero() && w.is_finite()) {
                violations.push(Violation {
                    field: FIELDS[i].into(),
                    rule: "w >= 0".into(),
                    message: format!("weight must be a nonnegative finite number, got {w}"),
                });
            }
        }
        for (field, value) in [("sigma2", self.sigma2), ("sigma5", self.sigma5)] {
            if !(value > F::zero() && value.is_finite()) {
                violations.push(Violation {
                    field: field.into(),
                    rule: "sigma > 0".into(),
                    message: format!("scale must be a positive finite number, got {value}"),
                });
            }
        }
        for (field, value) in [("tau2", self.tau2), ("tau5", self.tau5)] {
            if !value.is_finite() {
                violations.push(Violation {
                    field: field.into(),
                    rule: "tau finite".into(),
                    message: format!("threshold must be finite, got {value}"),
                });
            }
        }

        violations
    }
}
