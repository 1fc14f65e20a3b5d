//! Special functions for the quasiregular Schwarz lemma: the complete
//! elliptic integral `K`, the Groetzsch modulus `mu`, its inverse, the
//! Hersch-Pfluger distortion `phi_K`, and the visual-angle distortion
//! bound for `K`-quasiregular self-maps of the disk.

use crate::error::{Error, Result};
use crate::hyperbolic::chord_midpoint;
use crate::point::Point;
use crate::vam::tan_half_vam;

use core::f64::consts::{FRAC_PI_2, PI};

/// Convergence parameters for the special functions.
#[derive(Clone, Copy, Debug)]
pub struct DistortionContext {
    /// Absolute AGM convergence tolerance.
    pub agm_tol: f64,
    /// Tolerance for inverting `mu`.
    pub inverse_tol: f64,
    /// Iteration cap for AGM and bisection.
    pub max_iter: usize,
}

impl Default for DistortionContext {
    fn default() -> Self {
        DistortionContext {
            agm_tol: 1e-15,
            inverse_tol: 1e-14,
            max_iter: 200,
        }
    }
}

impl DistortionContext {
    pub fn new(agm_tol: f64, inverse_tol: f64, max_iter: usize) -> Result<Self> {
        if !(agm_tol > 0.0 && inverse_tol > 0.0 && max_iter >= 1)
            || !agm_tol.is_finite()
            || !inverse_tol.is_finite()
        {
            return Err(Error::InvalidConfig);
        }
        Ok(DistortionContext {
            agm_tol,
            inverse_tol,
            max_iter,
        })
    }

    fn agm(&self, mut a: f64, mut b: f64) -> Result<f64> {
        for _ in 0..self.max_iter {
            if (a - b).abs() <= self.agm_tol {
                return Ok(0.5 * (a + b));
            }
            let next = 0.5 * (a + b);
            b = libm::sqrt(a * b);
            a = next;
        }
        Err(Error::ConvergenceFailure)
    }

    /// Complete elliptic integral of the first kind in the modulus
    /// convention, `K(r) = pi / (2 AGM(1, sqrt(1 - r^2)))`; strictly
    /// increasing on `[0, 1)`.
    pub fn elliptic_k(&self, r: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::DomainError);
        }
        Ok(PI / (2.0 * self.agm(1.0, libm::sqrt(1.0 - r * r))?))
    }

    /// Groetzsch modulus `mu(r) = (pi/2) K(sqrt(1-r^2)) / K(r)`, the
    /// decreasing homeomorphism of `(0,1)` onto `(0,infinity)`.
    pub fn mu(&self, r: f64) -> Result<f64> {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::DomainError);
        }
        // ratio of the two AGMs; the pi/2 factors of K cancel
        let num = self.agm(1.0, libm::sqrt(1.0 - r * r))?;
        let den = self.agm(1.0, r)?;
        Ok(FRAC_PI_2 * num / den)
    }

    /// Inverse of `mu`, by bracketing and bisection on the strictly
    /// decreasing `mu`, seeded with the small-`r` asymptotic
    /// `mu(r) ~ log(4/r)`.
    ///
    /// Arguments below `pi/2` are routed through the reciprocal identity
    /// `mu(r) mu(sqrt(1-r^2)) = pi^2/4`: the root then lies within
    /// roundoff of 1 where `mu` is too flat to bisect, while the
    /// complementary root is small and perfectly conditioned. The result
    /// is kept inside `(0, 1)`.
    pub fn mu_inverse(&self, y: f64) -> Result<f64> {
        Ok(self.mu_inverse_pair(y)?.0)
    }

    /// `(r, sqrt(1 - r^2))` with `mu(r) = y`; the complement comes from the
    /// well-conditioned branch and stays accurate even when `r` itself
    /// rounds to 1.
    fn mu_inverse_pair(&self, y: f64) -> Result<(f64, f64)> {
        if !(y > 0.0) || !y.is_finite() {
            return Err(Error::DomainError);
        }
        if y >= FRAC_PI_2 {
            let r = self.invert_mu_lower(y)?;
            Ok((r, libm::sqrt((1.0 - r * r).max(0.0))))
        } else {
            let comp = self.invert_mu_lower(PI * PI / (4.0 * y))?;
            let max_below_one = 1.0 - f64::EPSILON / 2.0;
            let r = libm::sqrt((1.0 - comp * comp).max(0.0)).min(max_below_one);
            Ok((r, comp))
        }
    }

    /// Bisection for `mu(r) = y` with `y >= pi/2`, i.e. `r <= 1/sqrt(2)`,
    /// where the slope of `mu` is bounded away from zero.
    fn invert_mu_lower(&self, y: f64) -> Result<f64> {
        let seed = (4.0 * libm::exp(-y)).clamp(f64::MIN_POSITIVE, 0.5);
        let mut lo = seed;
        let mut iter = 0usize;
        while self.mu(lo)? < y {
            lo *= 0.5;
            iter += 1;
            if iter > self.max_iter || lo < f64::MIN_POSITIVE {
                return Err(Error::ConvergenceFailure);
            }
        }
        let mut hi = 0.7072; // just above the symmetry point mu^{-1}(pi/2)
        // mu(lo) >= y >= mu(hi)
        for _ in 0..self.max_iter {
            // geometric bisection while the bracket spans decades
            let mid = if hi / lo > 16.0 {
                libm::sqrt(lo * hi)
            } else {
                0.5 * (lo + hi)
            };
            if mid <= lo || mid >= hi {
                break;
            }
            let val = self.mu(mid)?;
            if (val - y).abs() <= self.inverse_tol {
                return Ok(mid);
            }
            if val > y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Err(Error::ConvergenceFailure)
    }

    /// Hersch-Pfluger distortion `phi_K(r) = mu^{-1}(mu(r)/K)`, extended by
    /// `phi_K(0) = 0` and `phi_K(1) = 1`.
    ///
    /// Any `K > 0` is accepted so that `phi_K` and `phi_{1/K}` form an
    /// inverse pair.
    pub fn phi_k(&self, k: f64, r: f64) -> Result<f64> {
        if !(k > 0.0) || !k.is_finite() || !(0.0..=1.0).contains(&r) {
            return Err(Error::DomainError);
        }
        if r == 0.0 {
            return Ok(0.0);
        }
        if r == 1.0 {
            return Ok(1.0);
        }
        self.mu_inverse(self.mu(r)? / k)
    }

    /// Residual of the functional identity
    /// `phi_K(r) / (1 + sqrt(1 - phi_K(r)^2)) = sqrt(phi_K((r / (1 + sqrt(1 - r^2)))^2))`
    /// for `K >= 1`; expected below 1e-10 everywhere.
    ///
    /// The left side is evaluated through the complement
    /// `s = sqrt(1 - phi_K(r)^2)` as `sqrt((1-s)/(1+s))`, which survives
    /// `phi_K(r)` being within roundoff of 1 (already the case for
    /// `K = 8`, `r = 0.95`).
    pub fn slem2_identity_residual(&self, k: f64, r: f64) -> Result<f64> {
        if k < 1.0 {
            return Err(Error::DomainError);
        }
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::DomainError);
        }
        let (_, comp) = self.mu_inverse_pair(self.mu(r)? / k)?;
        let lhs = libm::sqrt((1.0 - comp) / (1.0 + comp));
        let inner = r / (1.0 + libm::sqrt(1.0 - r * r));
        let rhs = libm::sqrt(self.phi_k(k, inner * inner)?);
        Ok((lhs - rhs).abs())
    }

    /// Schwarz-lemma distortion of `th(rho/2)`: the sharp bound
    /// `phi_K(th(rho/2))` and the explicit weaker bound
    /// `4^{1-1/K} (th(rho/2))^{1/K}`, returned as `(tight, weak)`.
    pub fn schwarz_rho_bound(&self, k: f64, rho_ab: f64) -> Result<(f64, f64)> {
        if k < 1.0 || !k.is_finite() || !(rho_ab >= 0.0) {
            return Err(Error::DomainError);
        }
        let r = libm::tanh(rho_ab / 2.0);
        let tight = self.phi_k(k, r)?;
        let weak = libm::pow(4.0, 1.0 - 1.0 / k) * libm::pow(r, 1.0 / k);
        Ok((tight, weak))
    }
}

/// [`DistortionContext::elliptic_k`] with default context.
pub fn elliptic_k(r: f64) -> Result<f64> {
    DistortionContext::default().elliptic_k(r)
}

/// [`DistortionContext::mu`] with default context.
pub fn mu(r: f64) -> Result<f64> {
    DistortionContext::default().mu(r)
}

/// [`DistortionContext::mu_inverse`] with default context.
pub fn mu_inverse(y: f64) -> Result<f64> {
    DistortionContext::default().mu_inverse(y)
}

/// [`DistortionContext::phi_k`] with default context.
pub fn phi_k(k: f64, r: f64) -> Result<f64> {
    DistortionContext::default().phi_k(k, r)
}

/// [`DistortionContext::slem2_identity_residual`] with default context.
pub fn slem2_identity_residual(k: f64, r: f64) -> Result<f64> {
    DistortionContext::default().slem2_identity_residual(k, r)
}

/// [`DistortionContext::schwarz_rho_bound`] with default context.
pub fn schwarz_rho_bound(k: f64, rho_ab: f64) -> Result<(f64, f64)> {
    DistortionContext::default().schwarz_rho_bound(k, rho_ab)
}

/// Both sides of the visual-angle Schwarz bound for a `K`-quasiregular
/// `f` with `f(a) = fa`, `f(b) = fb`:
///
/// `tan(v(fa,fb)/2) <= 2^{1-1/K} c (tan(v(a,b)/2))^{1/K}`,
/// `c = sqrt((1+|m1|)/(1-|m1|)) / (1+|m2|)^{1/K}`,
///
/// where `m1`, `m2` are the chord midpoints of `(fa,fb)` and `(a,b)`.
/// Returns `(lhs, rhs)` for the caller to compare; equality holds for
/// `K = 1` with `m1 = m2 = 0`.
pub fn main3_bound(a: Point, b: Point, fa: Point, fb: Point, k: f64) -> Result<(f64, f64)> {
    if k < 1.0 || !k.is_finite() {
        return Err(Error::DomainError);
    }
    let lhs = tan_half_vam(fa, fb)?;
    let m1 = chord_midpoint(fa, fb)?.abs();
    let m2 = chord_midpoint(a, b)?.abs();
    let c = libm::sqrt((1.0 + m1) / (1.0 - m1)) / libm::pow(1.0 + m2, 1.0 / k);
    let rhs = libm::pow(2.0, 1.0 - 1.0 / k) * c * libm::pow(tan_half_vam(a, b)?, 1.0 / k);
    Ok((lhs, rhs))
}
