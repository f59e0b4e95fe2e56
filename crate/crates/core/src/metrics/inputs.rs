use serde::{Deserialize, Serialize};

use super::error::Violation;

/// The six per-author scalars feeding the composite index.
///
/// All counts refer to one author's publication record:
///
/// * `n1` — number of published papers, single- and multi-author alike
/// * `n2` — total citations received over all papers
/// * `n3` — h-index over all papers
/// * `n4` — number of single-author papers
/// * `n5` — total citations received by the single-author papers
/// * `n6` — h-index computed over the single-author papers only
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MetricInputs {
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
    pub n4: u64,
    pub n5: u64,
    pub n6: u64,
}

impl MetricInputs {
    pub fn new(n1: u64, n2: u64, n3: u64, n4: u64, n5: u64, n6: u64) -> Self {
        Self {
            n1,
            n2,
            n3,
            n4,
            n5,
            n6,
        }
    }

    pub const ZERO: MetricInputs = MetricInputs {
        n1: 0,
        n2: 0,
        n3: 0,
        n4: 0,
        n5: 0,
        n6: 0,
    };

    /// Field accessor by position (1-based, `n1`..`n6`).
    pub fn get(&self, i: usize) -> u64 {
        match i {
            1 => self.n1,
            2 => self.n2,
            3 => self.n3,
            4 => self.n4,
            5 => self.n5,
            6 => self.n6,
            _ => panic!("metric input index out of range: {i}"),
        }
    }
}

/// Checks the cross-field consistency rules; empty result means all hold.
///
/// The single-author record is a subset of the full record, so its paper
/// count, citation total and h-index can never exceed the overall ones,
/// and no h-index can exceed the paper count it is computed over.
pub fn validate_inputs(inputs: &MetricInputs) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut check = |ok: bool, field: &'static str, rule: &'static str, message: String| {
        if !ok {
            violations.push(Violation {
                field: field.into(),
                rule: rule.into(),
                message,
            });
        }
    };

    check(
        inputs.n4 <= inputs.n1,
        "n4",
        "n4 <= n1",
        format!(
            "single-author paper count ({}) exceeds total paper count ({})",
            inputs.n4, inputs.n1
        ),
    );
    check(
        inputs.n5 <= inputs.n2,
        "n5",
        "n5 <= n2",
        format!(
            "single-author citations ({}) exceed total citations ({})",
            inputs.n5, inputs.n2
        ),
    );
    check(
        inputs.n3 <= inputs.n1,
        "n3",
        "n3 <= n1",
        format!(
            "h-index ({}) exceeds paper count ({})",
            inputs.n3, inputs.n1
        ),
    );
    check(
        inputs.n6 <= inputs.n4,
        "n6",
        "n6 <= n4",
        format!(
            "single-author h-index ({}) exceeds single-author paper count ({})",
            inputs.n6, inputs.n4
        ),
    );
    check(
        inputs.n6 <= inputs.n3,
        "n6",
        "n6 <= n3",
        format!(
            "single-author h-index ({}) exceeds overall h-index ({})",
            inputs.n6, inputs.n3
        ),
    );

    violations
}
