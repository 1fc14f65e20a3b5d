//! Euclidean primitives: angles, line intersections, circumcenters,
//! reflections, and the disk-preserving inversion attached to a pair of
//! points together with its orthogonal circle.

use crate::config::default_eq_scale;
use crate::error::{Error, Result};
use crate::point::Point;

/// A circle of the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Circle> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::NonFinite);
        }
        if radius < 0.0 {
            return Err(Error::DomainError);
        }
        Ok(Circle { center, radius })
    }

    /// A circle is orthogonal to the unit circle iff `radius^2 = |center|^2 - 1`.
    pub fn is_orthogonal_to_unit(&self, tol: f64) -> bool {
        let lhs = self.radius * self.radius;
        let rhs = self.center.norm_sqr() - 1.0;
        (lhs - rhs).abs() <= tol * lhs.abs().max(1.0)
    }
}

fn ensure_finite(points: &[Point]) -> Result<()> {
    if points.iter().all(|p| p.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// Angle at `vertex` between the rays toward `a` and `b`, in `[0, pi]`.
///
/// Equal to `arccos` of the normalized inner product of `a - vertex` and
/// `b - vertex`, evaluated through `atan2` for uniform accuracy near the
/// ends of the range.
pub fn angle_at(vertex: Point, a: Point, b: Point) -> Result<f64> {
    ensure_finite(&[vertex, a, b])?;
    if (a - vertex).abs() <= default_eq_scale(vertex, a)
        || (b - vertex).abs() <= default_eq_scale(vertex, b)
    {
        return Err(Error::DegenerateAngle);
    }
    Ok(angle_unchecked(vertex, a, b))
}

/// `angle_at` without the degeneracy checks, for hot loops over boundary
/// points that cannot coincide with the interior arguments.
#[inline]
pub(crate) fn angle_unchecked(vertex: Point, a: Point, b: Point) -> f64 {
    let u = a - vertex;
    let w = b - vertex;
    libm::atan2(u.cross(w).abs(), u.dot(w))
}

/// Intersection point of the lines `L[a,b]` and `L[c,d]`.
///
/// Closed form `w = u/v` with
/// `u = (conj(a)b - a conj(b))(c-d) - (a-b)(conj(c)d - c conj(d))` and
/// `v = (conj(a)-conj(b))(c-d) - (a-b)(conj(c)-conj(d))`.
pub fn line_intersection(a: Point, b: Point, c: Point, d: Point) -> Result<Point> {
    ensure_finite(&[a, b, c, d])?;
    let ab = (a - b).abs();
    let cd = (c - d).abs();
    if ab <= default_eq_scale(a, b) || cd <= default_eq_scale(c, d) {
        return Err(Error::DegenerateLine);
    }
    let u = (a.conj() * b - a * b.conj()) * (c - d) - (a - b) * (c.conj() * d - c * d.conj());
    let v = (a.conj() - b.conj()) * (c - d) - (a - b) * (c.conj() - d.conj());
    // |v| = 2 |a-b| |c-d| sin(angle between the lines)
    if v.abs() <= 2.0 * 1e-12 * ab * cd {
        return Err(Error::ParallelLines);
    }
    Ok(u / v)
}

/// Center of the circle through three non-collinear points.
pub fn circumcenter(a: Point, b: Point, c: Point) -> Result<Point> {
    ensure_finite(&[a, b, c])?;
    let num = a.norm_sqr() * (b - c) + b.norm_sqr() * (c - a) + c.norm_sqr() * (a - b);
    let den = a * (c.conj() - b.conj()) + b * (a.conj() - c.conj()) + c * (b.conj() - a.conj());
    // |den| = 2 |a-b| |c-b| sin(angle at b)
    if den.abs() <= 2.0 * 1e-12 * (a - b).abs() * (c - b).abs() {
        return Err(Error::CollinearPoints);
    }
    Ok(num / den)
}

/// Circle through three non-collinear points.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Result<Circle> {
    let center = circumcenter(a, b, c)?;
    Circle::new(center, (a - center).abs())
}

/// Mirror image of `z` across the line `L[a,b]`.
pub fn reflect_in_line(z: Point, a: Point, b: Point) -> Result<Point> {
    ensure_finite(&[z, a, b])?;
    let dc = a.conj() - b.conj();
    if (a - b).abs() <= default_eq_scale(a, b) {
        return Err(Error::DegenerateLine);
    }
    Ok((a - b) / dc * z.conj() - (a * b.conj() - a.conj() * b) / dc)
}

/// Distance from the origin to the line `L[a,b]`.
///
/// Equals `|conj(a)b - a conj(b)| / (2|a-b|)`, which is also the modulus of
/// the chord midpoint of the pair.
pub fn dist_origin_to_line(a: Point, b: Point) -> Result<f64> {
    ensure_finite(&[a, b])?;
    let ab = (a - b).abs();
    if ab <= default_eq_scale(a, b) {
        return Err(Error::DegenerateLine);
    }
    Ok(a.cross(b).abs() / ab)
}

/// The anticonformal self-map of the unit disk `h(z) = (c conj(z) - 1) / (conj(z) - conj(c))`
/// that swaps a given pair `a`, `b` and maps their chord onto itself.
///
/// The center is `c = num/den` with `num = a - b + ab(conj(a) - conj(b))`
/// and `den = |a|^2 - |b|^2`; the map, the boundary points of the orthogonal
/// circle `S(c, sqrt(|c|^2 - 1))`, and the residual of the boundary
/// quadratic are all evaluated from the homogeneous pair `(num, den)`, which
/// stays accurate when `|a|` and `|b|` are nearly equal and the division for
/// `c` alone would lose digits.
#[derive(Clone, Copy, Debug)]
pub struct Inversion {
    num: Point,
    den: f64,
}

impl Inversion {
    /// The inversion with `h(a) = b`.
    ///
    /// Requires both points in the open disk, nonzero, non-collinear with
    /// the origin, and of distinct moduli.
    pub fn swapping(a: Point, b: Point) -> Result<Inversion> {
        Self::swapping_scaled(a, b, default_eq_scale(a, b))
    }

    /// [`Inversion::swapping`] with an explicit equality threshold, so a
    /// dispatcher can keep its branch tests and these preconditions in
    /// agreement.
    pub(crate) fn swapping_scaled(a: Point, b: Point, scale: f64) -> Result<Inversion> {
        ensure_finite(&[a, b])?;
        if !a.in_unit_disk() || !b.in_unit_disk() {
            return Err(Error::OutsideDisk);
        }
        if (a.abs() - b.abs()).abs() <= scale {
            return Err(Error::EqualModulus);
        }
        if dist_origin_to_line(a, b).unwrap_or(0.0) <= scale {
            return Err(Error::CollinearWithOrigin);
        }
        Ok(Inversion {
            num: a - b + a * b * (a.conj() - b.conj()),
            den: a.norm_sqr() - b.norm_sqr(),
        })
    }

    /// An inversion from an explicit center with `|c| > 1`.
    pub fn from_center(c: Point) -> Result<Inversion> {
        ensure_finite(&[c])?;
        if c.norm_sqr() <= 1.0 {
            return Err(Error::DomainError);
        }
        Ok(Inversion { num: c, den: 1.0 })
    }

    /// The center `c = LIS[a, b, a*, b*]` of the orthogonal circle.
    pub fn center(&self) -> Point {
        self.num / self.den
    }

    /// The orthogonal circle `S(c, sqrt(|c|^2 - 1))`.
    pub fn circle(&self) -> Circle {
        let s = libm::sqrt((self.num.norm_sqr() - self.den * self.den).max(0.0));
        Circle {
            center: self.center(),
            radius: s / self.den.abs(),
        }
    }

    /// Forward application `h(z)`, evaluated as `(num conj(z) - den) / (den conj(z) - conj(num))`.
    pub fn apply(&self, z: Point) -> Result<Point> {
        ensure_finite(&[z])?;
        let d = z.conj() * self.den - self.num.conj();
        if d.abs() <= 1e-12 * self.num.abs().max(1.0) {
            return Err(Error::PoleInput);
        }
        Ok((self.num * z.conj() - Point::new(self.den, 0.0)) / d)
    }

    /// Intersection points of the orthogonal circle with the unit circle,
    /// `{z1, z2} = (1 +- i sqrt(|c|^2 - 1)) / conj(c)`, labeled with the `+`
    /// branch first.
    pub fn boundary_points(&self) -> (Point, Point) {
        let s = libm::sqrt((self.num.norm_sqr() - self.den * self.den).max(0.0));
        let s = if self.den >= 0.0 { s } else { -s };
        let nc = self.num.conj();
        (
            Point::new(self.den, s) / nc,
            Point::new(self.den, -s) / nc,
        )
    }

    /// Residual of the boundary-point quadratic
    /// `conj(num) z^2 - 2 den z + num = 0` at `z`.
    pub fn boundary_quadratic_residual(&self, z: Point) -> f64 {
        (self.num.conj() * z * z - 2.0 * self.den * z + self.num).abs()
    }

    /// The fixed point of `h` on the chord, i.e. the intersection of the
    /// orthogonal circle with `L[a,b]` that lies inside the unit disk.
    pub fn chord_point(&self, a: Point, b: Point) -> Result<Point> {
        let delta = b - a;
        // |den*z - num|^2 = |num|^2 - den^2 along z = a + t*delta
        let alpha = self.den * delta.norm_sqr();
        let beta = 2.0 * (self.den * a.dot(delta) - delta.dot(self.num));
        let gamma = self.den * a.norm_sqr() - 2.0 * a.dot(self.num) + self.den;
        let disc = (beta * beta - 4.0 * alpha * gamma).max(0.0);
        let q = -0.5 * (beta + libm::copysign(libm::sqrt(disc), beta));
        let candidates = if q == 0.0 {
            [0.0, 0.0]
        } else {
            [q / alpha, gamma / q]
        };
        let mut best: Option<Point> = None;
        for t in candidates {
            let z = a + delta * t;
            if z.in_unit_disk() && best.map_or(true, |w| z.norm_sqr() < w.norm_sqr()) {
                best = Some(z);
            }
        }
        best.ok_or(Error::ConvergenceFailure)
    }
}

/// Center of the orthogonal circle through the inversion swapping `a` and `b`.
pub fn inversion_center(a: Point, b: Point) -> Result<Point> {
    Ok(Inversion::swapping(a, b)?.center())
}

/// Apply the inversion `h(z) = (c conj(z) - 1) / (conj(z) - conj(c))` with
/// the given center `|c| > 1`.
pub fn apply_inversion(c: Point, z: Point) -> Result<Point> {
    Inversion::from_center(c)?.apply(z)
}

/// The points where the circle orthogonal to the unit circle through `a`
/// and `b` meets the unit circle.
pub fn orthocircle_boundary_points(a: Point, b: Point) -> Result<(Point, Point)> {
    Ok(Inversion::swapping(a, b)?.boundary_points())
}

/// The in-disk intersection of the orthogonal circle with the chord `L[a,b]`.
pub fn orthocircle_chord_point(a: Point, b: Point) -> Result<Point> {
    Inversion::swapping(a, b)?.chord_point(a, b)
}

/// The circle orthogonal to the unit circle whose inversion swaps `a` and `b`.
pub fn orthocircle(a: Point, b: Point) -> Result<Circle> {
    Ok(Inversion::swapping(a, b)?.circle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::PairSampler;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn pt(re: f64, im: f64) -> Point {
        Point::new(re, im)
    }

    #[test]
    fn angle_examples() {
        assert!((angle_at(Point::ZERO, Point::ONE, Point::I).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((angle_at(Point::ZERO, Point::ONE, pt(-1.0, 0.0)).unwrap() - PI).abs() < 1e-15);
        assert!((angle_at(Point::ONE, Point::ZERO, Point::I).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(
            angle_at(Point::ONE, Point::ONE, Point::I),
            Err(Error::DegenerateAngle)
        );
    }

    #[test]
    fn angle_symmetry() {
        let mut sampler = PairSampler::new(11);
        for _ in 0..200 {
            let (a, b) = sampler.next_pair();
            let v = sampler.next_point();
            if (a - v).abs() < 1e-6 || (b - v).abs() < 1e-6 {
                continue;
            }
            let lhs = angle_at(v, a, b).unwrap();
            let rhs = angle_at(v, b, a).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn line_intersection_examples() {
        let w = line_intersection(Point::ZERO, Point::ONE, Point::I, Point::ONE).unwrap();
        assert!((w - Point::ONE).abs() < 1e-14);
        let w = line_intersection(pt(-1.0, 0.0), Point::ONE, pt(0.0, -1.0), Point::I).unwrap();
        assert!(w.abs() < 1e-14);
        assert_eq!(
            line_intersection(Point::ZERO, Point::ONE, Point::I, pt(1.0, 1.0)),
            Err(Error::ParallelLines)
        );
    }

    #[test]
    fn line_intersection_lies_on_both_lines() {
        let mut sampler = PairSampler::new(12);
        for _ in 0..200 {
            let (a, b) = sampler.next_pair();
            let (c, d) = sampler.next_pair();
            let w = match line_intersection(a, b, c, d) {
                Ok(w) => w,
                Err(_) => continue,
            };
            let dist1 = (w - a).cross(b - a).abs() / (b - a).abs();
            let dist2 = (w - c).cross(d - c).abs() / (d - c).abs();
            let tol = 1e-12 * w.abs() + 1e-12;
            assert!(dist1 < tol && dist2 < tol, "w off-line by {dist1}, {dist2}");
        }
    }

    #[test]
    fn circumcenter_examples() {
        let m = circumcenter(Point::ONE, Point::I, pt(-1.0, 0.0)).unwrap();
        assert!(m.abs() < 1e-14);
        let m = circumcenter(Point::ZERO, pt(2.0, 0.0), pt(1.0, 1.0)).unwrap();
        assert!((m - Point::ONE).abs() < 1e-14);
        assert_eq!(
            circumcenter(Point::ZERO, Point::ONE, pt(2.0, 0.0)),
            Err(Error::CollinearPoints)
        );
    }

    #[test]
    fn circumcenter_equidistant() {
        let mut sampler = PairSampler::new(13);
        for _ in 0..200 {
            let (a, b) = sampler.next_pair();
            let c = sampler.next_point();
            let m = match circumcenter(a, b, c) {
                Ok(m) => m,
                Err(_) => continue,
            };
            let r = (m - a).abs();
            assert!((r - (m - b).abs()).abs() < 1e-12 * r.max(1.0));
            assert!((r - (m - c).abs()).abs() < 1e-12 * r.max(1.0));
        }
    }

    #[test]
    fn reflection_examples() {
        let w = reflect_in_line(Point::I, Point::ZERO, Point::ONE).unwrap();
        assert!((w - pt(0.0, -1.0)).abs() < 1e-15);
        let w = reflect_in_line(pt(0.5, 0.0), Point::ZERO, Point::ONE).unwrap();
        assert!((w - pt(0.5, 0.0)).abs() < 1e-15);
        let z = pt(0.3, 0.7);
        let back =
            reflect_in_line(reflect_in_line(z, Point::I, Point::ONE).unwrap(), Point::I, Point::ONE)
                .unwrap();
        assert!((back - z).abs() < 1e-14);
    }

    #[test]
    fn inversion_center_example() {
        // Both closed forms of the center and the line-intersection route
        // must agree on (0.3, 0.6i).
        let a = pt(0.3, 0.0);
        let b = pt(0.0, 0.6);
        let c = inversion_center(a, b).unwrap();
        assert!((c - pt(-0.7111111111111111, 2.022222222222222)).abs() < 1e-12);
        // Theorem form: (a(1-|b|^2) - b(1-|a|^2)) / (|a|^2 - |b|^2)
        let c2 = (a * (1.0 - b.norm_sqr()) - b * (1.0 - a.norm_sqr()))
            / (a.norm_sqr() - b.norm_sqr());
        assert!((c - c2).abs() < 1e-12);
        // LIS[a, b, a*, b*]
        let astar = a / a.norm_sqr();
        let bstar = b / b.norm_sqr();
        let c3 = line_intersection(a, b, astar, bstar).unwrap();
        assert!((c - c3).abs() < 1e-12);
    }

    #[test]
    fn inversion_center_outside_disk_sweep() {
        let mut sampler = PairSampler::new(14);
        let mut count = 0;
        while count < 1000 {
            let (a, b) = sampler.next_pair();
            match inversion_center(a, b) {
                Ok(c) => {
                    assert!(c.abs() > 1.0, "|c| = {} <= 1", c.abs());
                    count += 1;
                }
                Err(_) => continue,
            }
        }
    }

    #[test]
    fn inversion_center_collinear_rejected() {
        assert_eq!(
            inversion_center(pt(0.3, 0.0), pt(0.6, 0.0)),
            Err(Error::CollinearWithOrigin)
        );
        let a = Point::from_polar(0.5, FRAC_PI_4 / 1.5);
        let b = Point::from_polar(0.5, -FRAC_PI_4 / 1.5);
        assert_eq!(inversion_center(a, b), Err(Error::EqualModulus));
    }

    #[test]
    fn apply_inversion_swaps_pair() {
        let a = pt(0.3, 0.0);
        let b = pt(0.0, 0.6);
        let c = inversion_center(a, b).unwrap();
        let image = apply_inversion(c, a).unwrap();
        assert!((image - b).abs() < 1e-12);
    }

    #[test]
    fn apply_inversion_preserves_unit_circle() {
        let c = pt(2.0, 1.0);
        for theta in [0.1, 1.0, 2.5] {
            let z = Point::from_polar(1.0, theta);
            let w = apply_inversion(c, z).unwrap();
            assert!((w.abs() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn apply_inversion_involution() {
        let c = pt(2.0, 1.0);
        let z = pt(0.2, -0.4);
        let back = apply_inversion(c, apply_inversion(c, z).unwrap()).unwrap();
        assert!((back - z).abs() < 1e-14);
    }

    #[test]
    fn inversion_fixes_chord() {
        let a = pt(0.3, 0.0);
        let b = pt(0.0, 0.6);
        let inv = Inversion::swapping(a, b).unwrap();
        let mut sampler = PairSampler::new(15);
        let mut seen = 0;
        while seen < 100 {
            let t = sampler.next_point().re; // uniform-ish in (-0.95, 0.95)
            let w = a + (b - a) * (0.5 + t);
            if !w.in_unit_disk() {
                continue;
            }
            let h = inv.apply(w).unwrap();
            let off_line = (h - a).cross(b - a).abs() / (b - a).abs();
            assert!(off_line < 1e-10, "chord image off by {off_line}");
            seen += 1;
        }
    }

    #[test]
    fn orthocircle_example() {
        let a = pt(0.3, 0.0);
        let b = pt(0.0, 0.6);
        let (z1, z2) = orthocircle_boundary_points(a, b).unwrap();
        assert!((z1 - pt(-0.9891870347988566, 0.14665950424655586)).abs() < 1e-12);
        assert!((z2 - pt(0.6796760192158368, 0.7335124463176569)).abs() < 1e-12);
        assert!((z1.abs() - 1.0).abs() < 1e-12);
        assert!((z2.abs() - 1.0).abs() < 1e-12);
        let inv = Inversion::swapping(a, b).unwrap();
        assert!(inv.boundary_quadratic_residual(z1) < 1e-10);
        assert!(inv.boundary_quadratic_residual(z2) < 1e-10);
        // Both points lie on S(c, sqrt(|c|^2 - 1)).
        let circle = inv.circle();
        assert!(circle.is_orthogonal_to_unit(1e-12));
        for z in [z1, z2] {
            let on = ((z - circle.center).abs() - circle.radius).abs();
            assert!(on < 1e-10);
        }
    }

    #[test]
    fn orthocircle_residual_sweep() {
        let mut sampler = PairSampler::new(16);
        let mut count = 0;
        while count < 1000 {
            let (a, b) = sampler.next_pair();
            let inv = match Inversion::swapping(a, b) {
                Ok(inv) => inv,
                Err(_) => continue,
            };
            let (z1, z2) = inv.boundary_points();
            assert!(inv.boundary_quadratic_residual(z1) < 1e-10);
            assert!(inv.boundary_quadratic_residual(z2) < 1e-10);
            assert!((z1.abs() - 1.0).abs() < 1e-12);
            assert!((z2.abs() - 1.0).abs() < 1e-12);
            count += 1;
        }
    }

    #[test]
    fn orthocircle_equal_modulus_rejected() {
        let a = Point::from_polar(0.5, PI / 6.0);
        let b = Point::from_polar(0.5, -PI / 6.0);
        assert_eq!(
            orthocircle_boundary_points(a, b).unwrap_err(),
            Error::EqualModulus
        );
    }

    #[test]
    fn chord_point_between_endpoints() {
        let a = pt(0.3, 0.0);
        let b = pt(0.0, 0.6);
        let inv = Inversion::swapping(a, b).unwrap();
        let u = inv.chord_point(a, b).unwrap();
        assert!(u.in_unit_disk());
        // u is on the line and on the orthogonal circle
        let off_line = (u - a).cross(b - a).abs() / (b - a).abs();
        assert!(off_line < 1e-13);
        let circle = inv.circle();
        assert!(((u - circle.center).abs() - circle.radius).abs() < 1e-12);
        // and strictly between a and b
        let t = (u - a).dot(b - a) / (b - a).norm_sqr();
        assert!(t > 0.0 && t < 1.0);
    }

    #[test]
    fn rejects_non_finite() {
        let nan = pt(f64::NAN, 0.0);
        assert_eq!(angle_at(nan, Point::ONE, Point::I), Err(Error::NonFinite));
        assert_eq!(
            line_intersection(nan, Point::ONE, Point::I, Point::ZERO),
            Err(Error::NonFinite)
        );
    }
}
