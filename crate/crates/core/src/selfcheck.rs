//! Invariant suites behind the command-line self-test.
//!
//! Every suite draws its own deterministic substream from the seed, reports
//! the worst residual it observed, and passes iff that residual stays below
//! the suite threshold. All suites accept the caller's tolerance; the
//! oracle-comparison suite cannot do better than the grid oracle itself and
//! therefore uses `max(tol, 1e-6)`.

use alloc::vec::Vec;

use crate::distortion::{self, schwarz_rho_bound};
use crate::error::Result;
use crate::geom::{self, Inversion};
use crate::hyperbolic::{
    ahlfors_bracket, chord_midpoint, cross_ratio, geodesic_endpoints, hyperbolic_midpoint,
    mobius_ta, rho, DiskAutomorphism,
};
use crate::oracle::{evenly_separated_sequence, vam_bruteforce, PairSampler};
use crate::point::Point;
use crate::vam::{self, tan_half_vam};

use core::f64::consts::PI;

/// Outcome of one invariant suite.
#[derive(Clone, Copy, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Worst residual over all cases.
    pub worst: f64,
    /// Threshold the residual is held against.
    pub threshold: f64,
    /// Number of cases exercised.
    pub cases: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.worst <= self.threshold
    }
}

/// All suite names, in execution order.
pub const SUITE_NAMES: [&str; 12] = [
    "geom_primitives",
    "inversion_chord",
    "rho_invariance",
    "hyperbolic_midpoint",
    "route_agreement",
    "oracle_agreement",
    "extremal_certificates",
    "cor310_bounds",
    "metric_axioms",
    "even_spacing",
    "distortion_identities",
    "schwarz_bound",
];

/// Run one suite by name.
pub fn run_suite(name: &str, samples: usize, seed: u64, tol: f64) -> Option<SuiteReport> {
    let samples = samples.max(1);
    Some(match name {
        "geom_primitives" => geom_primitives(samples, seed, tol),
        "inversion_chord" => inversion_chord(samples, seed, tol),
        "rho_invariance" => rho_invariance(samples, seed, tol),
        "hyperbolic_midpoint" => midpoint_suite(samples, seed, tol),
        "route_agreement" => route_agreement(samples, seed, tol),
        "oracle_agreement" => oracle_agreement(samples, seed, tol),
        "extremal_certificates" => extremal_certificates(samples, seed, tol),
        "cor310_bounds" => bounds_suite(samples, seed, tol),
        "metric_axioms" => metric_axioms(samples, seed, tol),
        "even_spacing" => even_spacing(samples, seed, tol),
        "distortion_identities" => distortion_identities(tol),
        "schwarz_bound" => schwarz_bound(samples, seed, tol),
        _ => return None,
    })
}

/// Run every suite.
pub fn run_all(samples: usize, seed: u64, tol: f64) -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, samples, seed, tol).expect("known suite"))
        .collect()
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs()).max(1.0)
}

struct Worst(f64);

impl Worst {
    fn new() -> Worst {
        Worst(0.0)
    }
    fn push(&mut self, residual: f64) {
        if residual > self.0 || residual.is_nan() {
            self.0 = residual;
        }
    }
    fn push_result(&mut self, residual: Result<f64>) {
        match residual {
            Ok(r) => self.push(r),
            Err(_) => self.push(f64::INFINITY),
        }
    }
}

fn geom_primitives(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 10);
    let mut worst = Worst::new();
    for _ in 0..samples {
        let (a, b) = sampler.next_pair();
        let v = sampler.next_point();
        let c = sampler.next_point();

        if (a - v).abs() > 1e-6 && (b - v).abs() > 1e-6 {
            let lhs = geom::angle_at(v, a, b).unwrap();
            let rhs = geom::angle_at(v, b, a).unwrap();
            worst.push((lhs - rhs).abs());
        }
        if let Ok(w) = geom::line_intersection(a, b, c, v) {
            worst.push((w - a).cross(b - a).abs() / (b - a).abs() / w.abs().max(1.0));
            worst.push((w - c).cross(v - c).abs() / (v - c).abs() / w.abs().max(1.0));
        }
        if let Ok(m) = geom::circumcenter(a, b, c) {
            let r = (m - a).abs();
            worst.push(rel(r, (m - b).abs()));
            worst.push(rel(r, (m - c).abs()));
        }
        if let Ok(w) = geom::reflect_in_line(v, a, b) {
            let back = geom::reflect_in_line(w, a, b).unwrap();
            worst.push((back - v).abs());
        }
    }
    SuiteReport {
        name: "geom_primitives",
        worst: worst.0,
        threshold: tol,
        cases: samples,
    }
}

fn inversion_chord(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 11);
    let mut worst = Worst::new();
    let mut cases = 0;
    while cases < samples {
        let (a, b) = sampler.next_pair();
        let inv = match Inversion::swapping(a, b) {
            Ok(inv) => inv,
            Err(_) => continue,
        };
        cases += 1;
        // h(a) = b and involution
        match inv.apply(a) {
            Ok(image) => worst.push((image - b).abs()),
            Err(_) => worst.push(f64::INFINITY),
        }
        let z = Point::new(0.2, -0.1);
        if let Ok(once) = inv.apply(z) {
            if let Ok(back) = inv.apply(once) {
                worst.push((back - z).abs());
            }
        }
        // boundary preserved
        let theta = 2.0 * PI * sampler.next_f64();
        if let Ok(w) = inv.apply(Point::from_polar(1.0, theta)) {
            worst.push((w.abs() - 1.0).abs());
        }
        // chord preserved
        let t = sampler.next_f64();
        let on_chord = a + (b - a) * t;
        if on_chord.in_unit_disk() {
            if let Ok(h) = inv.apply(on_chord) {
                worst.push((h - a).cross(b - a).abs() / (b - a).abs());
            }
        }
        // orthogonality of S(c, sqrt(|c|^2 - 1)) by construction
        let circle = inv.circle();
        let (z1, z2) = inv.boundary_points();
        for p in [z1, z2] {
            worst.push(((p - circle.center).norm_sqr() - (circle.center.norm_sqr() - 1.0)).abs());
        }
    }
    SuiteReport {
        name: "inversion_chord",
        worst: worst.0,
        threshold: tol,
        cases,
    }
}

fn rho_invariance(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 12);
    let mut worst = Worst::new();
    for _ in 0..samples {
        let (a, b) = sampler.next_pair();
        let w = sampler.next_point();
        let d0 = rho(a, b).unwrap();
        let d1 = rho(mobius_ta(w, a).unwrap(), mobius_ta(w, b).unwrap()).unwrap();
        worst.push(rel(d0, d1));
        // Ahlfors bracket identity
        let lhs = ahlfors_bracket(a, b);
        let rhs = libm::sqrt((a - b).norm_sqr() + (1.0 - a.norm_sqr()) * (1.0 - b.norm_sqr()));
        worst.push(rel(lhs, rhs));
        // log cross-ratio form
        let (e1, e2) = geodesic_endpoints(a, b).unwrap();
        let xr = cross_ratio(e1, a, b, e2).unwrap();
        worst.push((libm::log(xr) - d0).abs());
        worst.push((e1.abs() - 1.0).abs().max((e2.abs() - 1.0).abs()));
    }
    SuiteReport {
        name: "rho_invariance",
        worst: worst.0,
        threshold: tol,
        cases: samples,
    }
}

fn midpoint_suite(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 13);
    let mut worst = Worst::new();
    for _ in 0..samples {
        let (a, b) = sampler.next_pair();
        let z = hyperbolic_midpoint(a, b).unwrap();
        let d1 = rho(a, z).unwrap();
        let d2 = rho(z, b).unwrap();
        worst.push((d1 - d2).abs());
        worst.push((d1 - rho(a, b).unwrap() / 2.0).abs());
        // chord midpoint is the perpendicular foot
        let m = chord_midpoint(a, b).unwrap();
        worst.push(m.dot((b - a).unit()).abs());
    }
    SuiteReport {
        name: "hyperbolic_midpoint",
        worst: worst.0,
        threshold: tol,
        cases: samples,
    }
}

fn general_routes(a: Point, b: Point) -> Result<[f64; 4]> {
    Ok([
        vam::vam_orthocircle(a, b)?.value,
        vam::vam_via_rho(a, b)?.value,
        vam::vam_hmid(a, b)?.value,
        vam::vam_quadratic(a, b)?.value,
    ])
}

fn route_agreement(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 14);
    let mut worst = Worst::new();
    let mut cases = 0;
    while cases < samples {
        let (a, b) = sampler.next_pair();
        let values = match general_routes(a, b) {
            Ok(v) => v,
            Err(_) => continue, // random pair on a singular locus
        };
        cases += 1;
        let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
        worst.push((hi - lo) / hi);
        // rotation invariance of the dispatcher
        let rot = Point::from_polar(1.0, 2.0 * PI * sampler.next_f64());
        worst.push(rel(
            vam::vam(a, b).unwrap().value,
            vam::vam(rot * a, rot * b).unwrap().value,
        ));
    }
    // special loci: collinear-with-origin and equal-modulus forms
    for _ in 0..samples {
        let theta = 2.0 * PI * sampler.next_f64();
        let r = 1.9 * sampler.next_f64() - 0.95;
        let s = 1.9 * sampler.next_f64() - 0.95;
        if (r - s).abs() < 1e-3 {
            continue;
        }
        let dir = Point::from_polar(1.0, theta);
        let a = dir * r;
        let b = dir * s;
        let radial = vam::vam_radial(a, b).unwrap();
        let arcsin_form = radial.diagnostics.get("arcsin_form").unwrap();
        worst.push((radial.value - arcsin_form).abs());
        worst.push((radial.value - vam::vam_via_rho(a, b).unwrap().value).abs());

        let modulus = 0.05 + 0.9 * sampler.next_f64();
        let (t1, t2) = (
            2.0 * PI * sampler.next_f64(),
            2.0 * PI * sampler.next_f64(),
        );
        let a = Point::from_polar(modulus, t1);
        let b = Point::from_polar(modulus, t2);
        if (a - b).abs() < 1e-3 {
            continue;
        }
        let eq = vam::vam_equal_modulus(a, b).unwrap();
        worst.push(rel(eq.value, vam::vam_via_rho(a, b).unwrap().value));
    }
    SuiteReport {
        name: "route_agreement",
        worst: worst.0,
        threshold: tol,
        cases,
    }
}

fn oracle_agreement(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 15);
    let mut worst = Worst::new();
    for _ in 0..samples {
        let (a, b) = sampler.next_pair();
        let closed = vam::vam(a, b).unwrap().value;
        let oracle = vam_bruteforce(a, b).unwrap();
        worst.push((closed - oracle.value).abs());
        // closed form must never exceed the realized supremum by more than
        // the oracle resolution
        worst.push((closed - oracle.value).max(0.0));
    }
    SuiteReport {
        name: "oracle_agreement",
        worst: worst.0,
        threshold: tol.max(1e-6),
        cases: samples,
    }
}

fn extremal_certificates(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 16);
    let mut worst = Worst::new();
    let mut cases = 0;
    while cases < samples {
        let (a, b) = sampler.next_pair();
        let result = match vam::vam_orthocircle(a, b) {
            Ok(r) => r,
            Err(_) => continue,
        };
        cases += 1;
        let z = result.extremal_point.unwrap();
        worst.push((z.abs() - 1.0).abs());
        worst.push((geom::angle_unchecked(z, a, b) - result.value).abs());
        worst.push(result.diagnostics.get("eq31_residual_z1").unwrap());
        worst.push(result.diagnostics.get("eq31_residual_z2").unwrap());
        // angle bisection at the extremal point
        let u = geom::orthocircle_chord_point(a, b).unwrap();
        let left = geom::angle_unchecked(z, a, u);
        let right = geom::angle_unchecked(z, u, b);
        worst.push((left - right).abs());
    }
    SuiteReport {
        name: "extremal_certificates",
        worst: worst.0,
        threshold: tol,
        cases,
    }
}

fn bounds_suite(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 17);
    let mut worst = Worst::new();
    for _ in 0..samples {
        let (a, b) = sampler.next_pair();
        let (lo, hi) = vam::vam_bounds(a, b).unwrap();
        let t = tan_half_vam(a, b).unwrap();
        worst.push((lo - t).max(0.0));
        worst.push((t - hi).max(0.0));
        // m = 0 collapse on a collinear pair from the same stream
        let dir = Point::from_polar(1.0, 2.0 * PI * sampler.next_f64());
        let r = 0.9 * sampler.next_f64();
        let s = -0.9 * sampler.next_f64();
        if (r - s).abs() > 1e-3 {
            let (lo, hi) = vam::vam_bounds(dir * r, dir * s).unwrap();
            worst.push((lo - hi).abs());
        }
    }
    SuiteReport {
        name: "cor310_bounds",
        worst: worst.0,
        threshold: tol,
        cases: samples,
    }
}

fn metric_axioms(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 18);
    let mut worst = Worst::new();
    for _ in 0..samples {
        let (a, b) = sampler.next_pair();
        let c = sampler.next_point();
        let vab = vam::vam(a, b).unwrap().value;
        worst.push((vab - vam::vam(b, a).unwrap().value).abs());
        if (c - a).abs() > 1e-6 && (c - b).abs() > 1e-6 {
            let vac = vam::vam(a, c).unwrap().value;
            let vcb = vam::vam(c, b).unwrap().value;
            worst.push((vab - vac - vcb).max(0.0));
        }
    }
    SuiteReport {
        name: "metric_axioms",
        worst: worst.0,
        threshold: tol,
        cases: samples,
    }
}

fn even_spacing(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 19);
    let chords = samples.min(100);
    let mut worst = Worst::new();
    let mut done = 0;
    while done < chords {
        let (p, q) = sampler.next_pair();
        let step = 0.1 + 0.3 * sampler.next_f64();
        let seq = match evenly_separated_sequence(p, q, step, 8) {
            Ok(seq) => seq,
            Err(_) => continue,
        };
        done += 1;
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for w in seq.windows(2) {
            let v = vam::vam(w[0], w[1]).unwrap().value;
            lo = lo.min(v);
            hi = hi.max(v);
        }
        worst.push(hi - lo);
    }
    SuiteReport {
        name: "even_spacing",
        worst: worst.0,
        threshold: tol,
        cases: done,
    }
}

fn distortion_identities(tol: f64) -> SuiteReport {
    let mut worst = Worst::new();
    let mut cases = 0;
    // mu reciprocal identity
    for i in 1..=99 {
        let r = i as f64 / 100.0;
        let prod = distortion::mu(r).unwrap() * distortion::mu(libm::sqrt(1.0 - r * r)).unwrap();
        worst.push((prod - PI * PI / 4.0).abs());
        cases += 1;
    }
    // phi_2 closed form and the phi roundtrip
    for i in 1..=19 {
        let r = i as f64 / 20.0;
        let p = distortion::phi_k(2.0, r).unwrap();
        worst.push((p - 2.0 * libm::sqrt(r) / (1.0 + r)).abs());
        let back = distortion::phi_k(0.5, p).unwrap();
        worst.push((back - r).abs());
        cases += 1;
    }
    // functional identity of the distortion function
    for k in [1.0, 1.5, 2.0, 4.0, 8.0] {
        for i in 0..=9 {
            let r = 0.05 + 0.1 * i as f64;
            worst.push_result(distortion::slem2_identity_residual(k, r));
            cases += 1;
        }
    }
    // tight <= weak
    for k in [1.0, 1.5, 2.0, 4.0] {
        for rho_ab in [0.1, 0.5, 1.0, 2.0, 5.0] {
            let (tight, weak) = schwarz_rho_bound(k, rho_ab).unwrap();
            worst.push((tight - weak).max(0.0));
            cases += 1;
        }
    }
    SuiteReport {
        name: "distortion_identities",
        worst: worst.0,
        threshold: tol,
        cases,
    }
}

fn schwarz_bound(samples: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut sampler = PairSampler::with_stream(seed, 20);
    let mut worst = Worst::new();
    let mut cases = 0;
    // Moebius family at K = 1
    for _ in 0..samples {
        let (a, b) = sampler.next_pair();
        let w = sampler.next_point();
        let f = DiskAutomorphism::mobius(w).unwrap();
        let fa = f.apply(a).unwrap();
        let fb = f.apply(b).unwrap();
        if (fa - fb).abs() < 1e-9 {
            continue;
        }
        let (lhs, rhs) = distortion::main3_bound(a, b, fa, fb, 1.0).unwrap();
        worst.push(lhs - rhs);
        cases += 1;
    }
    // radial stretches
    for k in [1.5, 2.0, 4.0] {
        let f = DiskAutomorphism::radial_stretch(k).unwrap();
        for _ in 0..samples {
            let (a, b) = sampler.next_pair();
            let fa = f.apply(a).unwrap();
            let fb = f.apply(b).unwrap();
            if (fa - fb).abs() < 1e-9 {
                continue;
            }
            let (lhs, rhs) = distortion::main3_bound(a, b, fa, fb, k).unwrap();
            worst.push(lhs - rhs);
            cases += 1;
        }
    }
    // equality case: identity on a diametral pair
    let a = Point::new(-0.5, 0.0);
    let b = Point::new(0.5, 0.0);
    let (lhs, rhs) = distortion::main3_bound(a, b, a, b, 1.0).unwrap();
    worst.push((lhs - rhs).abs());
    SuiteReport {
        name: "schwarz_bound",
        worst: worst.0,
        threshold: tol,
        cases,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_default_tolerance() {
        let reports = run_all(60, 7, 1e-9);
        assert_eq!(reports.len(), SUITE_NAMES.len());
        for report in &reports {
            assert!(
                report.passed(),
                "{} failed: worst {} > {}",
                report.name,
                report.worst,
                report.threshold
            );
            assert!(report.cases > 0);
        }
    }

    #[test]
    fn impossible_tolerance_fails() {
        let reports = run_all(30, 7, 1e-16);
        assert!(reports.iter().any(|r| !r.passed()));
    }

    #[test]
    fn single_sample_passes() {
        let reports = run_all(1, 3, 1e-9);
        for report in &reports {
            assert!(report.passed(), "{} failed with one sample", report.name);
        }
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("nope", 1, 1, 1e-9).is_none());
    }
}
