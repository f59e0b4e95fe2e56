//! Author-impact analytics: publication ingestion, a provider-agnostic
//! works fetcher, the composite A-index with its companion indices
//! (h-index, g-index, AsF), and sensitivity/comparison analysis on top.
//!
//! The numeric kernel is generic over the floating-point scalar via
//! [`scalar::Real`]; the aliases at the crate root fix `f64`, which is what
//! the command-line front end and the serialized schemas use.

pub mod analysis;
pub mod bibfetch;
pub mod ingestion;
pub mod metrics;
pub mod scalar;

pub use metrics::{IndexReport, MetricInputs, WeightVector};

/// `f64` weight vector, the configuration the CLI works with.
pub type Weights = metrics::WeightVector<f64>;
/// `f64` evaluation report.
pub type Report = metrics::IndexReport<f64>;
/// `f64` sensitivity series.
pub type Sweep = analysis::SweepSeries<f64>;
/// `f64` h-vs-single-author gap decomposition.
pub type Gap = analysis::GapReport<f64>;
