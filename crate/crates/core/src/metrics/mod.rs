//! Pure, deterministic computation of the author-impact indices.
//!
//! The composite index sums six weighted saturating components: paper
//! count, total citations, overall h-index, single-author paper count,
//! single-author citations and single-author h-index. Companion indices
//! (h, g, AsF) live here as well. Everything is a pure function of its
//! arguments and safe to call concurrently.

pub mod errata;
mod error;
mod formula;
mod indices;
mod inputs;
mod report;
mod weights;

pub use error::{MetricsError, Violation};
pub use formula::{a_index, asf, mu_linear, mu_thresholded, saturating_ratio};
pub use indices::{g_index, h_index};
pub use inputs::{validate_inputs, MetricInputs};
pub use report::IndexReport;
pub use weights::{
    WeightVector, DEFAULT_SIGMA2, DEFAULT_SIGMA5, DEFAULT_TAU2, DEFAULT_TAU5, DEFAULT_WEIGHTS,
};
