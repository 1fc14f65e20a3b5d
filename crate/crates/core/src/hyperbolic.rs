//! Hyperbolic geometry of the unit disk: the metric `rho`, Moebius
//! automorphisms, geodesic endpoints, the Ahlfors bracket, hyperbolic and
//! chord midpoints, and the disk automorphisms used as quasiregular test
//! maps.

use crate::config::default_eq_scale;
use crate::error::{Error, Result};
use crate::geom;
use crate::point::Point;

fn ensure_in_disk(points: &[Point]) -> Result<()> {
    for p in points {
        if !p.is_finite() {
            return Err(Error::NonFinite);
        }
        if !p.in_unit_disk() {
            return Err(Error::OutsideDisk);
        }
    }
    Ok(())
}

/// `sh(rho(a,b)/2) = |a - b| / sqrt((1 - |a|^2)(1 - |b|^2))`.
pub fn sinh_half_rho(a: Point, b: Point) -> Result<f64> {
    ensure_in_disk(&[a, b])?;
    Ok((a - b).abs() / libm::sqrt((1.0 - a.norm_sqr()) * (1.0 - b.norm_sqr())))
}

/// The hyperbolic distance of the unit disk.
///
/// Evaluated as `2 arsinh` of [`sinh_half_rho`], which is stable for small
/// separations; the log-cross-ratio form is kept as a test oracle only.
pub fn rho(a: Point, b: Point) -> Result<f64> {
    Ok(2.0 * libm::asinh(sinh_half_rho(a, b)?))
}

/// The Moebius automorphism `T_a(z) = (z - a) / (1 - conj(a) z)` of the
/// unit disk, with `T_0` the identity.
///
/// `T_a(a) = 0` and `T_a(+-a/|a|) = +-a/|a|`; the inverse is `T_{-a}`.
pub fn mobius_ta(a: Point, z: Point) -> Result<Point> {
    if !a.is_finite() || !z.is_finite() {
        return Err(Error::NonFinite);
    }
    if !a.in_unit_disk() {
        return Err(Error::OutsideDisk);
    }
    if a == Point::ZERO {
        return Ok(z);
    }
    let den = Point::ONE - a.conj() * z;
    if den.abs() <= default_eq_scale(a, z) {
        return Err(Error::PoleInput);
    }
    Ok((z - a) / den)
}

/// Absolute cross-ratio `|a,b,c,d| = |a-c||b-d| / (|a-b||c-d|)`, invariant
/// under Moebius transformations.
pub fn cross_ratio(a: Point, b: Point, c: Point, d: Point) -> Result<f64> {
    for p in [a, b, c, d] {
        if !p.is_finite() {
            return Err(Error::NonFinite);
        }
    }
    let ab = (a - b).abs();
    let cd = (c - d).abs();
    if ab <= default_eq_scale(a, b) || cd <= default_eq_scale(c, d) {
        return Err(Error::DegenerateQuadruple);
    }
    Ok((a - c).abs() * (b - d).abs() / (ab * cd))
}

/// Endpoints on the unit circle of the hyperbolic line through `a` and `b`,
/// returned as `(ep(a,b), ep(b,a))` so that `ep(a,b)`, `a`, `b`, `ep(b,a)`
/// occur in this order along the geodesic.
///
/// `ep(a,b) = T_{-b}(T_b(a)/|T_b(a)|)`; for a zero argument the formula is
/// extended by its limit, `ep(a,0) = a/|a|` and `ep(0,b) = -b/|b|`.
pub fn geodesic_endpoints(a: Point, b: Point) -> Result<(Point, Point)> {
    ensure_in_disk(&[a, b])?;
    if (a - b).abs() <= default_eq_scale(a, b) {
        return Err(Error::CoincidentPoints);
    }
    Ok((endpoint(a, b)?, endpoint(b, a)?))
}

fn endpoint(a: Point, b: Point) -> Result<Point> {
    if b == Point::ZERO {
        return Ok(a.unit());
    }
    let t = mobius_ta(b, a)?;
    mobius_ta(-b, t.unit())
}

/// Ahlfors bracket `A[a,b] = |1 - a conj(b)|`, equal to
/// `sqrt(|a-b|^2 + (1-|a|^2)(1-|b|^2))` on the closed disk.
pub fn ahlfors_bracket(a: Point, b: Point) -> f64 {
    (Point::ONE - a * b.conj()).abs()
}

/// The hyperbolic midpoint `z` with `rho(a,z) = rho(z,b) = rho(a,b)/2`:
///
/// `z = (b(1-|a|^2) + a(1-|b|^2)) / (1 - |a|^2 |b|^2 + A[a,b] sqrt((1-|a|^2)(1-|b|^2)))`.
pub fn hyperbolic_midpoint(a: Point, b: Point) -> Result<Point> {
    ensure_in_disk(&[a, b])?;
    let na = a.norm_sqr();
    let nb = b.norm_sqr();
    let den = 1.0 - na * nb + ahlfors_bracket(a, b) * libm::sqrt((1.0 - na) * (1.0 - nb));
    Ok((b * (1.0 - na) + a * (1.0 - nb)) / den)
}

/// Midpoint `m = (conj(a)b - a conj(b)) / (2(conj(a) - conj(b)))` of the
/// chord of the unit disk containing `a` and `b`: the foot of the
/// perpendicular from the origin onto `L[a,b]`, with `|m| = d(L[a,b], 0)`.
pub fn chord_midpoint(a: Point, b: Point) -> Result<Point> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFinite);
    }
    if (a - b).abs() <= default_eq_scale(a, b) {
        return Err(Error::CoincidentPoints);
    }
    let num = a.conj() * b - a * b.conj();
    let den = (a.conj() - b.conj()) * 2.0;
    Ok(num / den)
}

/// A self-map of the unit disk used to exercise the quasiregular Schwarz
/// lemma: a Moebius automorphism, an inversion, a radial `K`-stretch, or
/// the identity.
#[derive(Clone, Copy, Debug)]
pub enum DiskAutomorphism {
    Identity,
    /// `z -> (z - a)/(1 - conj(a) z)` with `|a| < 1`.
    MobiusTa(Point),
    /// `z -> (c conj(z) - 1)/(conj(z) - conj(c))` with `|c| > 1`.
    Inversion(Point),
    /// `z -> z |z|^{1/K - 1}` with `K >= 1`; exactly `K`-quasiconformal.
    RadialStretch(f64),
}

impl DiskAutomorphism {
    pub fn identity() -> Self {
        DiskAutomorphism::Identity
    }

    pub fn mobius(a: Point) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::NonFinite);
        }
        if !a.in_unit_disk() {
            return Err(Error::OutsideDisk);
        }
        Ok(DiskAutomorphism::MobiusTa(a))
    }

    pub fn inversion(c: Point) -> Result<Self> {
        if !c.is_finite() {
            return Err(Error::NonFinite);
        }
        if c.norm_sqr() <= 1.0 {
            return Err(Error::DomainError);
        }
        Ok(DiskAutomorphism::Inversion(c))
    }

    pub fn radial_stretch(k: f64) -> Result<Self> {
        if !k.is_finite() || k < 1.0 {
            return Err(Error::DomainError);
        }
        Ok(DiskAutomorphism::RadialStretch(k))
    }

    /// Forward application; defined on the closed disk and maps it onto
    /// itself.
    pub fn apply(&self, z: Point) -> Result<Point> {
        if !z.is_finite() {
            return Err(Error::NonFinite);
        }
        if z.norm_sqr() > 1.0 + 1e-12 {
            return Err(Error::OutsideDisk);
        }
        match *self {
            DiskAutomorphism::Identity => Ok(z),
            DiskAutomorphism::MobiusTa(a) => mobius_ta(a, z),
            DiskAutomorphism::Inversion(c) => geom::apply_inversion(c, z),
            DiskAutomorphism::RadialStretch(k) => {
                let r = z.abs();
                if r == 0.0 {
                    Ok(Point::ZERO)
                } else {
                    Ok(z * libm::pow(r, 1.0 / k - 1.0))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::PairSampler;

    fn pt(re: f64, im: f64) -> Point {
        Point::new(re, im)
    }

    const LN_3: f64 = 1.0986122886681098;

    #[test]
    fn rho_radial_value() {
        let r = rho(Point::ZERO, pt(0.5, 0.0)).unwrap();
        assert!((r - LN_3).abs() < 1e-15);
        assert_eq!(rho(pt(0.2, 0.1), pt(0.2, 0.1)).unwrap(), 0.0);
    }

    #[test]
    fn rho_frozen_value() {
        // Independent high-precision evaluation of sh(rho/2) = |a-b|/sqrt(...).
        let r = rho(pt(0.3, 0.0), pt(0.0, 0.6)).unwrap();
        assert!((r - 1.5863724661869796).abs() < 1e-14);
        let u = sinh_half_rho(pt(0.3, 0.0), pt(0.0, 0.6)).unwrap();
        assert!((u - 0.8790135580096789).abs() < 1e-15);
    }

    #[test]
    fn rho_outside_disk() {
        assert_eq!(
            rho(pt(1.0, 0.0), Point::ZERO),
            Err(Error::OutsideDisk)
        );
    }

    #[test]
    fn rho_mobius_invariance() {
        let mut sampler = PairSampler::new(21);
        for _ in 0..300 {
            let (a, b) = sampler.next_pair();
            let w = sampler.next_point();
            let d0 = rho(a, b).unwrap();
            let d1 = rho(mobius_ta(w, a).unwrap(), mobius_ta(w, b).unwrap()).unwrap();
            assert!((d0 - d1).abs() < 1e-12 * d0.max(1.0), "rho not invariant: {d0} vs {d1}");
        }
    }

    #[test]
    fn mobius_examples() {
        let a = pt(0.5, 0.0);
        assert!((mobius_ta(a, a).unwrap()).abs() < 1e-15);
        assert!((mobius_ta(a, Point::ONE).unwrap() - Point::ONE).abs() < 1e-15);
        assert!((mobius_ta(a, Point::ZERO).unwrap() - pt(-0.5, 0.0)).abs() < 1e-15);
    }

    #[test]
    fn mobius_inverse() {
        let a = pt(0.3, -0.4);
        let z = pt(0.1, 0.7);
        let w = mobius_ta(a, z).unwrap();
        let back = mobius_ta(-a, w).unwrap();
        assert!((back - z).abs() < 1e-15);
    }

    #[test]
    fn cross_ratio_examples() {
        let v = cross_ratio(Point::ZERO, Point::ONE, pt(2.0, 0.0), pt(3.0, 0.0)).unwrap();
        assert!((v - 4.0).abs() < 1e-15);
        assert_eq!(
            cross_ratio(Point::ZERO, Point::ZERO, Point::ONE, pt(2.0, 0.0)),
            Err(Error::DegenerateQuadruple)
        );
    }

    #[test]
    fn cross_ratio_mobius_invariance() {
        let w = pt(0.0, 0.4);
        let mut sampler = PairSampler::new(22);
        for _ in 0..100 {
            let (a, b) = sampler.next_pair();
            let (c, d) = sampler.next_pair();
            let v0 = match cross_ratio(a, b, c, d) {
                Ok(v) => v,
                Err(_) => continue,
            };
            let t = |z| mobius_ta(w, z).unwrap();
            let v1 = cross_ratio(t(a), t(b), t(c), t(d)).unwrap();
            assert!((v0 - v1).abs() < 1e-12 * v0.max(1.0));
        }
    }

    #[test]
    fn endpoints_radial() {
        let (e1, e2) = geodesic_endpoints(pt(0.3, 0.0), pt(0.6, 0.0)).unwrap();
        assert!((e1 - pt(-1.0, 0.0)).abs() < 1e-14);
        assert!((e2 - Point::ONE).abs() < 1e-14);
    }

    #[test]
    fn endpoints_zero_argument() {
        // Limit extension: ep(a,0) = a/|a|, ep(0,a) = -a/|a|.
        let a = pt(0.3, 0.4);
        let (e1, e2) = geodesic_endpoints(a, Point::ZERO).unwrap();
        assert!((e1 - a.unit()).abs() < 1e-14);
        assert!((e2 + a.unit()).abs() < 1e-14);
        // order ep(a,b), a, b, ep(b,a) gives positive log cross-ratio = rho
        let lhs = libm::log(cross_ratio(e1, a, Point::ZERO, e2).unwrap());
        assert!((lhs - rho(a, Point::ZERO).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn endpoints_on_unit_circle_sweep() {
        let mut sampler = PairSampler::new(23);
        for _ in 0..1000 {
            let (a, b) = sampler.next_pair();
            let (e1, e2) = geodesic_endpoints(a, b).unwrap();
            assert!((e1.abs() - 1.0).abs() < 1e-12);
            assert!((e2.abs() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn log_cross_ratio_equals_rho() {
        let a = pt(0.3, 0.0);
        let b = pt(0.0, 0.6);
        let (e1, e2) = geodesic_endpoints(a, b).unwrap();
        let lhs = libm::log(cross_ratio(e1, a, b, e2).unwrap());
        let rhs = rho(a, b).unwrap();
        assert!((lhs - rhs).abs() < 1e-10, "{lhs} vs {rhs}");
    }

    #[test]
    fn ahlfors_examples() {
        assert!((ahlfors_bracket(Point::ZERO, pt(0.3, -0.2)) - 1.0).abs() < 1e-15);
        let a = pt(0.3, 0.4);
        assert!((ahlfors_bracket(a, a) - (1.0 - a.norm_sqr())).abs() < 1e-15);
        let v = ahlfors_bracket(pt(0.3, 0.0), pt(0.0, 0.6));
        assert!((v - libm::sqrt(1.0324)).abs() < 1e-15);
    }

    #[test]
    fn ahlfors_identity_sweep() {
        let mut sampler = PairSampler::new(24);
        for _ in 0..1000 {
            let (a, b) = sampler.next_pair();
            let lhs = ahlfors_bracket(a, b);
            let rhs = libm::sqrt(
                (a - b).norm_sqr() + (1.0 - a.norm_sqr()) * (1.0 - b.norm_sqr()),
            );
            assert!((lhs - rhs).abs() < 1e-14 * lhs.max(1.0));
        }
    }

    #[test]
    fn midpoint_examples() {
        let z = hyperbolic_midpoint(Point::ZERO, pt(0.6, 0.0)).unwrap();
        assert!((z - pt(1.0 / 3.0, 0.0)).abs() < 1e-15);
        let z = hyperbolic_midpoint(pt(-0.7, 0.0), pt(0.7, 0.0)).unwrap();
        assert!(z.abs() < 1e-15);
    }

    #[test]
    fn midpoint_defining_property() {
        let a = pt(0.3, 0.0);
        let b = pt(0.0, 0.6);
        let z = hyperbolic_midpoint(a, b).unwrap();
        assert!((z - pt(0.11015390285180186, 0.31325016123481154)).abs() < 1e-13);
        let d1 = rho(a, z).unwrap();
        let d2 = rho(z, b).unwrap();
        assert!((d1 - d2).abs() < 1e-10);
        assert!((d1 - rho(a, b).unwrap() / 2.0).abs() < 1e-10);
    }

    #[test]
    fn midpoint_commutes_with_mobius() {
        let mut sampler = PairSampler::new(25);
        for _ in 0..200 {
            let (a, b) = sampler.next_pair();
            let w = sampler.next_point();
            let t = |z| mobius_ta(w, z).unwrap();
            let m1 = t(hyperbolic_midpoint(a, b).unwrap());
            let m2 = hyperbolic_midpoint(t(a), t(b)).unwrap();
            // image of midpoint satisfies the defining property, so the two
            // agree up to the formula's accuracy
            assert!((m1 - m2).abs() < 1e-10);
        }
    }

    #[test]
    fn chord_midpoint_examples() {
        assert!(chord_midpoint(pt(0.3, 0.0), pt(0.6, 0.0)).unwrap().abs() < 1e-15);
        let m = chord_midpoint(pt(-0.2, 0.5), pt(0.4, 0.5)).unwrap();
        assert!((m - pt(0.0, 0.5)).abs() < 1e-15);
        let m = chord_midpoint(pt(0.3, 0.0), pt(0.0, 0.6)).unwrap();
        assert!((m - pt(0.24, 0.12)).abs() < 1e-15);
        assert!((m.norm_sqr() - 0.072).abs() < 1e-15);
    }

    #[test]
    fn chord_midpoint_is_perpendicular_foot() {
        let mut sampler = PairSampler::new(26);
        for _ in 0..300 {
            let (a, b) = sampler.next_pair();
            let m = chord_midpoint(a, b).unwrap();
            // m on the line
            let off = (m - a).cross(b - a).abs() / (b - a).abs();
            assert!(off < 1e-12);
            // m perpendicular to the direction
            assert!(m.dot((b - a).unit()).abs() < 1e-12);
        }
    }

    #[test]
    fn automorphism_examples() {
        let id = DiskAutomorphism::identity();
        let z = pt(0.3, -0.1);
        assert_eq!(id.apply(z).unwrap(), z);

        let stretch = DiskAutomorphism::radial_stretch(2.0).unwrap();
        let w = stretch.apply(pt(0.25, 0.0)).unwrap();
        assert!((w - pt(0.5, 0.0)).abs() < 1e-15);

        let a = pt(0.3, 0.0);
        let b = pt(0.0, 0.6);
        let c = geom::inversion_center(a, b).unwrap();
        let inv = DiskAutomorphism::inversion(c).unwrap();
        assert!((inv.apply(a).unwrap() - b).abs() < 1e-12);

        assert!(matches!(
            DiskAutomorphism::radial_stretch(0.5),
            Err(Error::DomainError)
        ));
    }

    #[test]
    fn stretch_composition() {
        let s1 = DiskAutomorphism::radial_stretch(1.7).unwrap();
        let s2 = DiskAutomorphism::radial_stretch(2.3).unwrap();
        let s12 = DiskAutomorphism::radial_stretch(1.7 * 2.3).unwrap();
        let mut sampler = PairSampler::new(27);
        for _ in 0..200 {
            let z = sampler.next_point();
            let w1 = s1.apply(s2.apply(z).unwrap()).unwrap();
            let w2 = s12.apply(z).unwrap();
            assert!((w1 - w2).abs() < 1e-12);
        }
    }

    #[test]
    fn automorphisms_preserve_disk() {
        let mut sampler = PairSampler::new(28);
        let maps = [
            DiskAutomorphism::identity(),
            DiskAutomorphism::mobius(pt(0.4, -0.3)).unwrap(),
            DiskAutomorphism::inversion(pt(1.5, 1.2)).unwrap(),
            DiskAutomorphism::radial_stretch(3.0).unwrap(),
        ];
        for _ in 0..1000 {
            let z = sampler.next_point();
            for map in &maps {
                let w = map.apply(z).unwrap();
                assert!(w.in_unit_disk(), "{map:?} sent {z:?} to {w:?}");
            }
        }
    }
}
