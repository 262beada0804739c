use serde::{Deserialize, Serialize};

/// Mixed absolute/relative tolerance: a quantity `x` measured against a
/// reference scale `s` is negligible when `|x| <= abs + rel * s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub const DEFAULT_ABS: f64 = 1e-12;
    pub const DEFAULT_REL: f64 = 1e-9;

    pub fn new(abs: f64, rel: f64) -> Self {
        assert!(
            abs.is_finite() && rel.is_finite() && abs >= 0.0 && rel >= 0.0,
            "tolerances must be finite and non-negative"
        );
        Self { abs, rel }
    }

    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale
    }

    pub fn negligible(&self, value: f64, scale: f64) -> bool {
        value.abs() <= self.threshold(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs: Self::DEFAULT_ABS,
            rel: Self::DEFAULT_REL,
        }
    }
}
