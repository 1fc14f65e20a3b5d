//! Independent brute-force verification: boundary maximization of the
//! visual angle by grid scan plus golden-section refinement, constant-rho
//! point sequences along chords, and the seeded random-configuration
//! generator used by the property suites.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{default_eq_scale, ToleranceConfig};
use crate::error::{Error, Result};
use crate::geom::angle_unchecked;
use crate::hyperbolic::rho;
use crate::point::Point;

use core::f64::consts::PI;

/// Default number of coarse grid points on the unit circle.
///
/// The boundary angle function has one local maximum per side of the chord
/// `L[a,b]`; 4096 points isolate both basins for every admissible pair with
/// moduli up to 0.99 and separation at least 1e-3.
pub const DEFAULT_GRID: usize = 4096;

/// Result of the brute-force boundary maximization.
#[derive(Clone, Copy, Debug)]
pub struct OracleReport {
    /// The maximal boundary angle found.
    pub value: f64,
    /// The maximizing boundary point.
    pub argmax: Point,
    /// Coarse grid size used for the scan.
    pub grid_size: usize,
    /// Golden-section iterations spent on the winning bracket.
    pub refinement_iterations: usize,
    /// Width of the winning bracket after refinement.
    pub bracket_width: f64,
}

/// Brute-force supremum of `angle(a, z, b)` over the unit circle with the
/// default grid.
pub fn vam_bruteforce(a: Point, b: Point) -> Result<OracleReport> {
    vam_bruteforce_grid(a, b, DEFAULT_GRID)
}

/// Brute-force supremum with an explicit coarse grid size.
///
/// Scans `theta -> angle(a, e^{i theta}, b)` on a uniform grid, then runs
/// golden-section refinement on the bracket around every local maximum
/// until the bracket is narrower than 1e-12. Ties between basins resolve
/// toward smaller `theta`.
pub fn vam_bruteforce_grid(a: Point, b: Point, grid: usize) -> Result<OracleReport> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFinite);
    }
    if !a.in_unit_disk() || !b.in_unit_disk() {
        return Err(Error::OutsideDisk);
    }
    if (a - b).abs() <= default_eq_scale(a, b) {
        return Err(Error::CoincidentPoints);
    }
    let grid = grid.max(16);
    let step = 2.0 * PI / grid as f64;
    let f = |theta: f64| angle_unchecked(Point::from_polar(1.0, theta), a, b);

    let values: Vec<f64> = (0..grid).map(|k| f(k as f64 * step)).collect();

    let mut best_value = f64::NEG_INFINITY;
    let mut best_theta = 0.0;
    let mut best_iters = 0;
    let mut best_width = 0.0;
    for k in 0..grid {
        let prev = values[(k + grid - 1) % grid];
        let next = values[(k + 1) % grid];
        if values[k] > prev && values[k] >= next {
            let lo = (k as f64 - 1.0) * step;
            let hi = (k as f64 + 1.0) * step;
            let (theta, value, iters, width) = golden_max(&f, lo, hi, 1e-12);
            if value > best_value {
                best_value = value;
                best_theta = theta;
                best_iters = iters;
                best_width = width;
            }
        }
    }
    debug_assert!(best_value.is_finite(), "no local maximum on the grid");

    let mut theta = best_theta % (2.0 * PI);
    if theta < 0.0 {
        theta += 2.0 * PI;
    }
    Ok(OracleReport {
        value: best_value,
        argmax: Point::from_polar(1.0, theta),
        grid_size: grid,
        refinement_iterations: best_iters,
        bracket_width: best_width,
    })
}

/// Golden-section maximization on `[lo, hi]`; returns
/// `(argmax, max, iterations, final_width)`. The bracket width shrinks by
/// the golden ratio every iteration.
fn golden_max(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, width_tol: f64) -> (f64, f64, usize, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fc >= fd { (c, fc) } else { (d, fd) };
    let mut iters = 0;
    while hi - lo > width_tol && iters < 200 {
        let previous_width = hi - lo;
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = f(d);
        }
        if fc > best.1 {
            best = (c, fc);
        }
        if fd > best.1 {
            best = (d, fd);
        }
        iters += 1;
        debug_assert!(hi - lo < previous_width);
    }
    (best.0, best.1, iters, hi - lo)
}

/// Points `a_1 = p, a_2, ...` marching from `p` toward `q` along `L[p,q]`
/// with constant hyperbolic spacing `rho(a_j, a_{j+1}) = step`, found by
/// bisection in the Euclidean parameter; `n` points in total.
pub fn evenly_separated_sequence(p: Point, q: Point, step: f64, n: usize) -> Result<Vec<Point>> {
    if !p.is_finite() || !q.is_finite() {
        return Err(Error::NonFinite);
    }
    if !p.in_unit_disk() || !q.in_unit_disk() {
        return Err(Error::OutsideDisk);
    }
    if (p - q).abs() <= default_eq_scale(p, q) {
        return Err(Error::CoincidentPoints);
    }
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::DomainError);
    }
    let root_tol = ToleranceConfig::default().root_tol;
    let dir = (q - p).unit();
    let mut out = Vec::with_capacity(n);
    out.push(p);
    let mut current = p;
    while out.len() < n {
        // distance from `current` to the unit circle along `dir`
        let cd = current.dot(dir);
        let s_max = -cd + libm::sqrt(cd * cd + (1.0 - current.norm_sqr()));
        let cap = s_max * (1.0 - 1e-12);
        let dist = |s: f64| rho(current, current + dir * s).expect("stays inside the disk");
        if dist(cap) < step {
            return Err(Error::ChordExhausted);
        }
        let mut lo = 0.0;
        let mut hi = cap;
        let mut mid = 0.5 * cap;
        for _ in 0..200 {
            mid = 0.5 * (lo + hi);
            if mid == lo || mid == hi {
                break;
            }
            let g = dist(mid) - step;
            if g.abs() <= 1e-13 && hi - lo <= root_tol {
                break;
            }
            if g < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        current = current + dir * mid;
        out.push(current);
    }
    Ok(out)
}

/// Deterministic area-uniform sampler of point pairs in the disk of radius
/// `max_modulus`, rejecting pairs closer than `min_separation`.
///
/// Streams are counter-based (ChaCha), so independent substreams for one
/// seed come from [`PairSampler::with_stream`].
pub struct PairSampler {
    rng: ChaCha8Rng,
    max_modulus: f64,
    min_separation: f64,
}

impl PairSampler {
    /// Sampler with the default parameters (`max_modulus = 0.95`,
    /// `min_separation = 1e-3`).
    pub fn new(seed: u64) -> PairSampler {
        Self::with_params(seed, 0.95, 1e-3).expect("default parameters are valid")
    }

    pub fn with_params(seed: u64, max_modulus: f64, min_separation: f64) -> Result<PairSampler> {
        if !(max_modulus > 0.0 && max_modulus < 1.0) || !(min_separation >= 0.0) {
            return Err(Error::InvalidConfig);
        }
        Ok(PairSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_modulus,
            min_separation,
        })
    }

    /// An independent substream of the same seed.
    pub fn with_stream(seed: u64, stream: u64) -> PairSampler {
        let mut sampler = Self::new(seed);
        sampler.rng.set_stream(stream);
        sampler
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// One point, uniform by area over the disk of radius `max_modulus`.
    pub fn next_point(&mut self) -> Point {
        let r = self.max_modulus * libm::sqrt(self.rng.gen::<f64>());
        let theta = 2.0 * PI * self.rng.gen::<f64>();
        Point::from_polar(r, theta)
    }

    /// A pair with `|a - b| >= min_separation`.
    pub fn next_pair(&mut self) -> (Point, Point) {
        loop {
            let a = self.next_point();
            let b = self.next_point();
            if (a - b).abs() >= self.min_separation {
                return (a, b);
            }
        }
    }
}
