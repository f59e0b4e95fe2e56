//! Side-by-side ranking of several authors' inputs.

use serde::{Deserialize, Serialize};

use crate::metrics::{a_index, IndexReport, MetricInputs, WeightVector};
use crate::scalar::Real;

use super::error::AnalysisError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow<F: Real = f64> {
    pub rank: usize,
    pub label: String,
    pub report: IndexReport<F>,
}

/// Rows ordered by descending index value; equal scores keep their input
/// order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonTable<F: Real = f64> {
    pub rows: Vec<ComparisonRow<F>>,
}

/// Scores each labelled input row and ranks the results.
pub fn compare<F: Real>(
    entries: &[(String, MetricInputs)],
    weights: &WeightVector<F>,
) -> Result<ComparisonTable<F>, AnalysisError> {
    if entries.is_empty() {
        return Err(AnalysisError::NoEntries);
    }
    for (idx, (label, _)) in entries.iter().enumerate() {
        if entries[..idx].iter().any(|(seen, _)| seen == label) {
            return Err(AnalysisError::DuplicateLabel(label.clone()));
        }
    }

    let mut rows: Vec<ComparisonRow<F>> = entries
        .iter()
        .map(|(label, inputs)| {
            Ok(ComparisonRow {
                rank: 0,
                label: label.clone(),
                report: a_index(inputs, weights)?,
            })
        })
        .collect::<Result<_, AnalysisError>>()?;

    // Stable sort: ties stay in input order.
    rows.sort_by(|a, b| {
        b.report
            .a_index
            .partial_cmp(&a.report.a_index)
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    for (idx, row) in rows.iter_mut().enumerate() {
        row.rank = idx + 1;
    }
    Ok(ComparisonTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(label: &str, inputs: MetricInputs) -> (String, MetricInputs) {
        (label.to_string(), inputs)
    }

    fn default_weights() -> WeightVector {
        WeightVector::default()
    }

    #[test]
    fn equal_h_different_single_author_record_splits_the_ranking() {
        let table = compare(
            &[
                entry("author-1", MetricInputs::new(20, 300, 11, 0, 0, 0)),
                entry("author-2", MetricInputs::new(20, 300, 11, 15, 300, 8)),
            ],
            &default_weights(),
        )
        .unwrap();

        assert_eq!(table.rows[0].label, "author-2");
        assert_eq!(table.rows[0].rank, 1);
        assert_eq!(table.rows[1].label, "author-1");
        assert_eq!(table.rows[1].rank, 2);
        // Same h-index, very different totals.
        assert_eq!(table.rows[0].report.h_all, table.rows[1].report.h_all);
        assert!((table.rows[0].report.a_index - 86.529762).abs() < 1e-6);
        assert!((table.rows[1].report.a_index - 36.880952).abs() < 1e-6);
    }

    #[test]
    fn single_entry_gets_rank_one() {
        let table = compare(
            &[entry("only", MetricInputs::new(3, 19, 2, 2, 12, 2))],
            &default_weights(),
        )
        .unwrap();
        assert_eq!(table.rows.len(), 1);
        assert_eq!(table.rows[0].rank, 1);
    }

    #[test]
    fn identical_rows_tie_break_by_input_order() {
        let inputs = MetricInputs::new(10, 50, 4, 2, 10, 1);
        let table = compare(
            &[entry("alpha", inputs), entry("beta", inputs)],
            &default_weights(),
        )
        .unwrap();
        assert_eq!(table.rows[0].label, "alpha");
        assert_eq!(table.rows[1].label, "beta");
        assert_eq!(table.rows[0].report.a_index, table.rows[1].report.a_index);
    }

    #[test]
    fn duplicate_label_is_an_error() {
        let inputs = MetricInputs::new(10, 50, 4, 2, 10, 1);
        let err = compare(
            &[entry("same", inputs), entry("same", inputs)],
            &default_weights(),
        )
        .unwrap_err();
        assert!(matches!(err, AnalysisError::DuplicateLabel(l) if l == "same"));
    }

    #[test]
    fn empty_entry_list_is_an_error() {
        assert!(matches!(
            compare::<f64>(&[], &default_weights()),
            Err(AnalysisError::NoEntries)
        ));
    }

    #[test]
    fn three_rows_sorted_descending() {
        let table = compare(
            &[
                entry("low", MetricInputs::new(5, 10, 2, 0, 0, 0)),
                entry("high", MetricInputs::new(40, 900, 25, 20, 500, 15)),
                entry("mid", MetricInputs::new(20, 200, 11, 5, 100, 3)),
            ],
            &default_weights(),
        )
        .unwrap();
        let labels: Vec<&str> = table.rows.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["high", "mid", "low"]);
        assert!(table
            .rows
            .windows(2)
            .all(|w| w[0].report.a_index >= w[1].report.a_index));
    }

    #[test]
    fn ranking_is_invariant_under_uniform_weight_scaling() {
        let entries = [
            entry("a", MetricInputs::new(12, 340, 9, 3, 40, 2)),
            entry("b", MetricInputs::new(30, 150, 10, 10, 80, 5)),
            entry("c", MetricInputs::new(7, 700, 7, 0, 0, 0)),
        ];
        let base = compare(&entries, &default_weights()).unwrap();
        let mut scaled = default_weights();
        for w in &mut scaled.omega {
            *w *= 3.5;
        }
        let rescored = compare(&entries, &scaled).unwrap();
        let order =
            |t: &ComparisonTable| t.rows.iter().map(|r| r.label.clone()).collect::<Vec<_>>();
        assert_eq!(order(&base), order(&rescored));
    }
}
