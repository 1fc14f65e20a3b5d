//! Shared tolerance configuration.

use crate::error::{Error, Result};
use crate::point::Point;

/// Branch-selection and root-finding tolerances shared across modules.
///
/// Equality branches (coincident points, equal moduli, collinearity with the
/// origin) are decided relative to the configuration scale
/// `max(|a|, |b|, 1)`; the formulas on either side of each branch blow up
/// smoothly, so callers reroute instead of failing near the locus.
#[derive(Clone, Copy, Debug)]
pub struct ToleranceConfig {
    /// Relative tolerance for equality branches.
    pub eq_tol: f64,
    /// Absolute tolerance for iterative root-finding.
    pub root_tol: f64,
    /// Acceptance tolerance against the brute-force oracle.
    pub oracle_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            eq_tol: 1e-12,
            root_tol: 1e-14,
            oracle_tol: 1e-6,
        }
    }
}

impl ToleranceConfig {
    pub fn new(eq_tol: f64, root_tol: f64, oracle_tol: f64) -> Result<Self> {
        let ok = eq_tol > 0.0
            && eq_tol < 1.0
            && root_tol > 0.0
            && oracle_tol > 0.0
            && eq_tol.is_finite()
            && root_tol.is_finite()
            && oracle_tol.is_finite();
        if !ok {
            return Err(Error::InvalidConfig);
        }
        Ok(ToleranceConfig {
            eq_tol,
            root_tol,
            oracle_tol,
        })
    }

    /// Absolute threshold for equality branches near points `a`, `b`.
    #[inline]
    pub fn eq_scale(&self, a: Point, b: Point) -> f64 {
        self.eq_tol * a.abs().max(b.abs()).max(1.0)
    }
}

/// Default equality threshold used by operations without an explicit config.
#[inline]
pub(crate) fn default_eq_scale(a: Point, b: Point) -> f64 {
    ToleranceConfig::default().eq_scale(a, b)
}
