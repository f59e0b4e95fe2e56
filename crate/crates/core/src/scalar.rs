//! Floating-point scalar abstraction for the index arithmetic.
//!
//! All score computations are generic over [`Real`] so the same formulas run
//! in `f32` or `f64`. The crate root exposes `f64` aliases for everyday use.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + Debug + Display + 'static {
    /// Lossy conversion from an integer count (paper counts, citation totals).
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("integer count converts to float")
    }

    /// Convenience conversion from an `f64` literal (weights, tolerances).
    fn from_literal(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal converts to float")
    }
}

impl Real for f32 {}
impl Real for f64 {}
