use serde::{Deserialize, Serialize};

use super::formula;
use super::inputs::MetricInputs;
use super::weights::WeightVector;
use crate::scalar::Real;

/// Full evaluation of one author's record: the composite index, its six
/// components and the companion indices.
///
/// `a_index` is exactly the sum of `mu`. `a_index_normalized` rescales it
/// to a 0..100 range when the weights do not sum to 100 (and equals
/// `a_index` when they do). `g_all` is only known when the report was
/// produced from an actual publication record, since the g-index needs the
/// citation distribution rather than the six summary inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexReport<F: Real = f64> {
    pub a_index: F,
    pub a_index_normalized: F,
    pub mu: [F; 6],
    pub h_all: u64,
    pub g_all: Option<u64>,
    pub asf: F,
    pub inputs: MetricInputs,
    pub weights: WeightVector<F>,
}

impl<F: Real> IndexReport<F> {
    pub(crate) fn new(inputs: MetricInputs, weights: WeightVector<F>, mu: [F; 6]) -> Self {
        let a_index = mu.iter().fold(F::zero(), |acc, &m| acc + m);
        let total = weights.total();
        let a_index_normalized = if total > F::zero() {
            a_index * F::from_literal(100.0) / total
        } else {
            F::zero()
        };
        Self {
            a_index,
            a_index_normalized,
            mu,
            h_all: inputs.n3,
            g_all: None,
            asf: formula::asf(inputs.n3),
            inputs,
            weights,
        }
    }

    /// Attaches the g-index computed from the underlying citation multiset.
    pub fn with_g_all(mut self, g: u64) -> Self {
        self.g_all = Some(g);
        self
    }

    /// Sum of the single-author components (4, 5 and 6).
    pub fn single_author_terms(&self) -> F {
        self.mu[3] + self.mu[4] + self.mu[5]
    }

    /// Sum of the whole-record components (1, 2 and 3).
    pub fn collaborative_terms(&self) -> F {
        self.mu[0] + self.mu[1] + self.mu[2]
    }
}
