//! Diagnostic splitting the index into collaborative and single-author parts.

use serde::{Deserialize, Serialize};

use crate::metrics::{a_index, MetricInputs, MetricsError, WeightVector};
use crate::scalar::Real;

/// How much of an author's standing rests on single-author work.
///
/// `h_gap` is the distance between the overall h-index and the
/// single-author h-index; a large gap with near-zero `a_single_terms`
/// marks a record built almost entirely on co-authored papers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapReport<F: Real = f64> {
    pub h_all: u64,
    pub h_single: u64,
    pub h_gap: u64,
    pub a_full: F,
    /// μ₄ + μ₅ + μ₆.
    pub a_single_terms: F,
    /// μ₁ + μ₂ + μ₃.
    pub a_collab_terms: F,
}

pub fn gap_report<F: Real>(
    inputs: &MetricInputs,
    weights: &WeightVector<F>,
) -> Result<GapReport<F>, MetricsError> {
    let report = a_index(inputs, weights)?;
    Ok(GapReport {
        h_all: inputs.n3,
        h_single: inputs.n6,
        h_gap: inputs.n3 - inputs.n6,
        a_full: report.a_index,
        a_single_terms: report.single_author_terms(),
        a_collab_terms: report.collaborative_terms(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_weights() -> WeightVector {
        WeightVector::default()
    }

    #[test]
    fn no_single_author_record_means_zero_single_terms() {
        let report =
            gap_report(&MetricInputs::new(20, 300, 11, 0, 0, 0), &default_weights()).unwrap();
        assert_eq!(report.h_all, 11);
        assert_eq!(report.h_single, 0);
        assert_eq!(report.h_gap, 11);
        assert_eq!(report.a_single_terms, 0.0);
        assert!((report.a_full - report.a_collab_terms).abs() < 1e-12);
    }

    #[test]
    fn strong_single_author_record_carries_most_of_the_index() {
        let report = gap_report(
            &MetricInputs::new(20, 300, 11, 15, 300, 8),
            &default_weights(),
        )
        .unwrap();
        assert_eq!(report.h_gap, 3);
        // 13.125 + 9.857142857… + 26.666666666…
        assert!((report.a_single_terms - 49.648809523809526).abs() < 1e-9);
        assert!((report.a_full - (report.a_single_terms + report.a_collab_terms)).abs() < 1e-9);
    }

    #[test]
    fn all_zero_inputs_gap_is_zero() {
        let report = gap_report(&MetricInputs::ZERO, &default_weights()).unwrap();
        assert_eq!(report.h_gap, 0);
        assert_eq!(report.a_single_terms, 0.0);
        assert_eq!(report.a_collab_terms, 0.0);
    }

    #[test]
    fn inconsistent_inputs_propagate_the_validation_error() {
        let bad = MetricInputs::new(5, 10, 2, 6, 0, 0);
        assert!(gap_report(&bad, &default_weights()).is_err());
    }
}
