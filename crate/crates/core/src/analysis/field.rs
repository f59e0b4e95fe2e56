use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::metrics::MetricInputs;

use super::error::AnalysisError;

/// One of the six scalar inputs, addressable by name for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputField {
    N1,
    N2,
    N3,
    N4,
    N5,
    N6,
}

impl InputField {
    pub const ALL: [InputField; 6] = [
        InputField::N1,
        InputField::N2,
        InputField::N3,
        InputField::N4,
        InputField::N5,
        InputField::N6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InputField::N1 => "n1",
            InputField::N2 => "n2",
            InputField::N3 => "n3",
            InputField::N4 => "n4",
            InputField::N5 => "n5",
            InputField::N6 => "n6",
        }
    }

    /// 1-based position of the field.
    pub fn index(self) -> usize {
        self as usize + 1
    }

    /// Returns `base` with this field replaced by `value`.
    pub fn substitute(self, base: &MetricInputs, value: u64) -> MetricInputs {
        let mut out = *base;
        match self {
            InputField::N1 => out.n1 = value,
            InputField::N2 => out.n2 = value,
            InputField::N3 => out.n3 = value,
            InputField::N4 => out.n4 = value,
            InputField::N5 => out.n5 = value,
            InputField::N6 => out.n6 = value,
        }
        out
    }

    pub fn get(self, inputs: &MetricInputs) -> u64 {
        inputs.get(self.index())
    }
}

impl fmt::Display for InputField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InputField {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "n1" => Ok(InputField::N1),
            "n2" => Ok(InputField::N2),
            "n3" => Ok(InputField::N3),
            "n4" => Ok(InputField::N4),
            "n5" => Ok(InputField::N5),
            "n6" => Ok(InputField::N6),
            other => Err(AnalysisError::UnknownField(other.to_string())),
        }
    }
}
