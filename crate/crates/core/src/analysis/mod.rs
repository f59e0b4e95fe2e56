//! Sensitivity sweeps, multi-author comparisons, weight renormalization,
//! and the h-gap diagnostic, all built on the metrics kernel.

mod compare;
mod error;
mod field;
mod gap;
mod sweep;
mod weights;

pub use compare::{compare, ComparisonRow, ComparisonTable};
pub use error::AnalysisError;
pub use field::InputField;
pub use gap::{gap_report, GapReport};
pub use sweep::{sweep, RejectedPoint, SweepPoint, SweepSeries};
pub use weights::renormalize_weights;
