use serde::{Deserialize, Serialize};

/// One verification outcome, serialized as
/// `{"suite", "samples", "max_residual", "sign", "pass"}`.
///
/// `sign` is the KKS/Ω sign observed by pullback checks and `0` for suites
/// that do not involve it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub samples: usize,
    pub max_residual: f64,
    pub sign: i32,
    pub pass: bool,
}

impl SuiteReport {
    /// Report that passes when `max_residual <= threshold`.
    pub fn against(suite: impl Into<String>, samples: usize, max_residual: f64, threshold: f64) -> Self {
        Self {
            suite: suite.into(),
            samples,
            max_residual,
            sign: 0,
            // NaN residuals fail
            pass: max_residual <= threshold,
        }
    }
}
