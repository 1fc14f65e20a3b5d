//! The visual angle metric `v(a,b)` of the unit disk: the supremum over
//! boundary points `z` of the angle at `z` subtended by `a` and `b`.
//!
//! Several independent closed forms are provided. They agree to roundoff
//! and are cross-checked against each other and against the brute-force
//! boundary maximization in [`crate::oracle`]:
//!
//! * [`vam_radial`] for pairs collinear with the origin (arcsin/arctan form),
//! * [`vam_equal_modulus`] for pairs of equal modulus (arctan form),
//! * [`vam_orthocircle`] via the boundary points of the orthogonal circle,
//! * [`vam_via_rho`] via the hyperbolic distance and the chord midpoint,
//! * [`vam_hmid`] via the hyperbolic midpoint construction,
//! * [`vam_quadratic`] via the real quadratic for the inscribed right
//!   triangle.
//!
//! [`vam`] dispatches between them by branch.

use alloc::vec::Vec;

use crate::config::ToleranceConfig;
use crate::error::{Error, Result};
use crate::geom::{self, Inversion};
use crate::hyperbolic::{chord_midpoint, hyperbolic_midpoint, mobius_ta, sinh_half_rho};
use crate::point::Point;

/// Which formula produced a [`VamResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Coincident,
    Radial,
    EqualModulus,
    Orthocircle,
    ViaRho,
    Hmid,
    Quadratic,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Coincident => "coincident",
            Route::Radial => "radial",
            Route::EqualModulus => "equal_modulus",
            Route::Orthocircle => "orthocircle",
            Route::ViaRho => "via_rho",
            Route::Hmid => "hmid",
            Route::Quadratic => "quadratic",
        }
    }

    pub fn from_name(name: &str) -> Option<Route> {
        Some(match name {
            "coincident" => Route::Coincident,
            "radial" => Route::Radial,
            "equal_modulus" => Route::EqualModulus,
            "orthocircle" => Route::Orthocircle,
            "via_rho" => Route::ViaRho,
            "hmid" => Route::Hmid,
            "quadratic" => Route::Quadratic,
            _ => return None,
        })
    }
}

/// Named residuals and side values recorded by the routes.
#[derive(Clone, Debug, Default)]
pub struct Diagnostics(Vec<(&'static str, f64)>);

impl Diagnostics {
    pub fn push(&mut self, name: &'static str, value: f64) {
        self.0.push((name, value));
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.0.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Value of the visual angle metric together with its certificate.
#[derive(Clone, Debug)]
pub struct VamResult {
    /// The metric value in radians, in `[0, pi)`.
    pub value: f64,
    /// A maximizing boundary point, for the routes that produce one.
    pub extremal_point: Option<Point>,
    pub route: Route,
    pub diagnostics: Diagnostics,
}

fn ensure_in_disk(a: Point, b: Point) -> Result<()> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFinite);
    }
    if !a.in_unit_disk() || !b.in_unit_disk() {
        return Err(Error::OutsideDisk);
    }
    Ok(())
}

/// Visual angle metric with the default tolerances.
pub fn vam(a: Point, b: Point) -> Result<VamResult> {
    vam_cfg(a, b, &ToleranceConfig::default())
}

/// Visual angle metric, dispatching on the branch loci.
///
/// Branch order: coincident, collinear with the origin, equal modulus,
/// general; each earlier branch is a singular locus of the later formulas.
/// Near a branch boundary the diagnostics record the competing formula's
/// value; the selected branch is returned without averaging.
pub fn vam_cfg(a: Point, b: Point, cfg: &ToleranceConfig) -> Result<VamResult> {
    ensure_in_disk(a, b)?;
    let scale = cfg.eq_scale(a, b);
    if (a - b).abs() <= scale {
        return Ok(VamResult {
            value: 0.0,
            extremal_point: None,
            route: Route::Coincident,
            diagnostics: Diagnostics::default(),
        });
    }
    let chord_dist = a.cross(b).abs() / (a - b).abs();
    let modulus_gap = (a.abs() - b.abs()).abs();

    let mut result = if chord_dist <= scale {
        radial_result(a, b)
    } else if modulus_gap <= scale {
        equal_modulus_result(a, b)
    } else {
        orthocircle_result(a, b, scale)
    };

    // Near-branch bookkeeping: record the competing formulas' values.
    if chord_dist <= 10.0 * scale {
        let u = sinh_half_rho(a, b)?;
        result.diagnostics.push("radial_form", libm::atan(u));
        result
            .diagnostics
            .push("via_rho_form", 2.0 * libm::atan(tan_half_vam(a, b)?));
    }
    if modulus_gap <= 10.0 * scale {
        result.diagnostics.push(
            "equal_modulus_form",
            2.0 * libm::atan((a - b).abs() / (2.0 - (a + b).abs())),
        );
    }
    Ok(result)
}

/// Radial case: `a`, `b`, `0` collinear.
///
/// The value satisfies both `tan v = sh(rho/2)` and, after rotating the
/// pair onto the real axis with `r < s`, `v = arcsin((s-r)/(1-rs))`; the
/// arctan form is used for extraction. The extremal point is the tangency
/// point `p = ((r+s)/(1+rs), sqrt((1-r^2)(1-s^2))/(1+rs))` rotated back to
/// the chord.
pub fn vam_radial(a: Point, b: Point) -> Result<VamResult> {
    ensure_in_disk(a, b)?;
    let cfg = ToleranceConfig::default();
    let scale = cfg.eq_scale(a, b);
    if (a - b).abs() <= scale {
        return Err(Error::CoincidentPoints);
    }
    if a.cross(b).abs() / (a - b).abs() > scale {
        return Err(Error::NotCollinear);
    }
    Ok(radial_result(a, b))
}

fn radial_result(a: Point, b: Point) -> VamResult {
    let dir = (b - a).unit();
    let r = a.dot(dir);
    let s = b.dot(dir); // s - r = |b - a| > 0
    let u = (s - r) / libm::sqrt((1.0 - r * r) * (1.0 - s * s));
    let value = libm::atan(u);
    let denom = 1.0 + r * s;
    let p = dir
        * Point::new(
            (r + s) / denom,
            libm::sqrt(((1.0 - r * r) * (1.0 - s * s)).max(0.0)) / denom,
        );
    let mut diagnostics = Diagnostics::default();
    let arcsin_form = libm::asin((s - r) / (1.0 - r * s));
    diagnostics.push("arcsin_form", arcsin_form);
    diagnostics.push("arcsin_arctan_residual", (arcsin_form - value).abs());
    diagnostics.push(
        "certificate_residual",
        (geom::angle_unchecked(p, a, b) - value).abs(),
    );
    VamResult {
        value,
        extremal_point: Some(p),
        route: Route::Radial,
        diagnostics,
    }
}

/// Equal-modulus case: `v = 2 arctan(|a-b| / (2 - |a+b|))`.
///
/// The extremal point is the tangency point `(a+b)/|a+b|`; for a diametral
/// pair (`a + b = 0`) the two symmetric tangency points give equal angles
/// and the one with nonnegative imaginary part in the chord frame,
/// `i (a-b)/|a-b|`, is returned.
pub fn vam_equal_modulus(a: Point, b: Point) -> Result<VamResult> {
    ensure_in_disk(a, b)?;
    let cfg = ToleranceConfig::default();
    let scale = cfg.eq_scale(a, b);
    if (a - b).abs() <= scale {
        return Err(Error::CoincidentPoints);
    }
    if (a.abs() - b.abs()).abs() > scale {
        return Err(Error::NotEqualModulus);
    }
    Ok(equal_modulus_result(a, b))
}

fn equal_modulus_result(a: Point, b: Point) -> VamResult {
    let value = 2.0 * libm::atan((a - b).abs() / (2.0 - (a + b).abs()));
    let sum = a + b;
    let p = if sum.abs() > ToleranceConfig::default().eq_scale(a, b) {
        sum.unit()
    } else {
        (a - b).unit().mul_i()
    };
    let mut diagnostics = Diagnostics::default();
    diagnostics.push(
        "certificate_residual",
        (geom::angle_unchecked(p, a, b) - value).abs(),
    );
    VamResult {
        value,
        extremal_point: Some(p),
        route: Route::EqualModulus,
        diagnostics,
    }
}

/// General case via the orthogonal circle: `v = max(angle(a,z1,b), angle(a,z2,b))`
/// over the two points where the orthogonal circle through `a`, `b` meets
/// the unit circle.
pub fn vam_orthocircle(a: Point, b: Point) -> Result<VamResult> {
    ensure_in_disk(a, b)?;
    let scale = ToleranceConfig::default().eq_scale(a, b);
    orthocircle_result_checked(a, b, scale)
}

fn orthocircle_result(a: Point, b: Point, scale: f64) -> VamResult {
    // The dispatcher has already excluded the singular loci.
    orthocircle_result_checked(a, b, scale).expect("dispatcher guarantees preconditions")
}

fn orthocircle_result_checked(a: Point, b: Point, scale: f64) -> Result<VamResult> {
    let inv = Inversion::swapping_scaled(a, b, scale)?;
    let (z1, z2) = inv.boundary_points();
    let ang1 = geom::angle_unchecked(z1, a, b);
    let ang2 = geom::angle_unchecked(z2, a, b);
    let (value, point, other) = if ang1 >= ang2 {
        (ang1, z1, ang2)
    } else {
        (ang2, z2, ang1)
    };
    let mut diagnostics = Diagnostics::default();
    diagnostics.push("eq31_residual_z1", inv.boundary_quadratic_residual(z1));
    diagnostics.push("eq31_residual_z2", inv.boundary_quadratic_residual(z2));
    diagnostics.push("other_angle", other);
    Ok(VamResult {
        value,
        extremal_point: Some(point),
        route: Route::Orthocircle,
        diagnostics,
    })
}

/// `tan(v(a,b)/2) = (1+|m|) u / (1 + sqrt(1 + (1-|m|^2) u^2))` with
/// `u = sh(rho(a,b)/2)` and `m` the chord midpoint.
pub fn tan_half_vam(a: Point, b: Point) -> Result<f64> {
    let u = sinh_half_rho(a, b)?;
    let m = chord_midpoint(a, b)?.abs();
    Ok((1.0 + m) * u / (1.0 + libm::sqrt(1.0 + (1.0 - m * m) * u * u)))
}

/// General formula through the hyperbolic metric; produces no extremal
/// point.
pub fn vam_via_rho(a: Point, b: Point) -> Result<VamResult> {
    let t = tan_half_vam(a, b)?;
    let mut diagnostics = Diagnostics::default();
    diagnostics.push("tan_half", t);
    Ok(VamResult {
        value: 2.0 * libm::atan(t),
        extremal_point: None,
        route: Route::ViaRho,
        diagnostics,
    })
}

/// `sin v(a,b)` in closed form; reduces to `th(rho/2)` for `m = 0`.
///
/// Kept as a cross-check: arctan extraction is preferred for the value
/// because arcsin loses precision near `pi/2`.
pub fn vam_sin(a: Point, b: Point) -> Result<f64> {
    let u = sinh_half_rho(a, b)?;
    let m = chord_midpoint(a, b)?.abs();
    let w = libm::sqrt(1.0 + (1.0 - m * m) * u * u);
    Ok((1.0 + m) * (1.0 + w) * u / (1.0 + w + (1.0 + m) * u * u))
}

/// General case via the hyperbolic midpoint `m`: the candidate tangency
/// points are `q_{1,2} = T_m^{-1}(+-Q)` with
/// `Q = i (T_m(a) - T_m(b)) / |T_m(a) - T_m(b)|`.
pub fn vam_hmid(a: Point, b: Point) -> Result<VamResult> {
    ensure_in_disk(a, b)?;
    if (a - b).abs() <= ToleranceConfig::default().eq_scale(a, b) {
        return Err(Error::CoincidentPoints);
    }
    let m = hyperbolic_midpoint(a, b)?;
    let ta = mobius_ta(m, a)?;
    let tb = mobius_ta(m, b)?;
    let q = (ta - tb).unit().mul_i();
    let q1 = mobius_ta(-m, q)?;
    let q2 = mobius_ta(-m, -q)?;
    let ang1 = geom::angle_unchecked(q1, a, b);
    let ang2 = geom::angle_unchecked(q2, a, b);
    let (value, point, other) = if ang1 >= ang2 {
        (ang1, q1, ang2)
    } else {
        (ang2, q2, ang1)
    };
    let mut diagnostics = Diagnostics::default();
    diagnostics.push("modulus_match", (ta.abs() - tb.abs()).abs());
    diagnostics.push("other_angle", other);
    Ok(VamResult {
        value,
        extremal_point: Some(point),
        route: Route::Hmid,
        diagnostics,
    })
}

/// General case via the real quadratic in `t` for `p = a + t(b-a)i`, the
/// apex of the right triangle inscribed in the maximal circle through `a`
/// and `b`; the root of smaller absolute value selects that circle.
///
/// With `x = Re(a conj(b))`, `y = Im(a conj(b))` the coefficients are
/// `A = 4(|a-b|^2 - y^2)`, `B = 8 y (1-x)`,
/// `C = 4(|a|^2 + |b|^2 - 1 - x^2)`, and the discriminant equals
/// `64 |a-b|^2 (1-|a|^2)(1-|b|^2)`.
///
/// The value is read off at the circle's tangency point with the unit
/// circle. The angle at `p` itself (kept in the diagnostics) equals the
/// value whenever the value is at most a right angle; being an angle of a
/// right triangle it cannot exceed `pi/2`, and beyond that regime it is
/// the supplement.
pub fn vam_quadratic(a: Point, b: Point) -> Result<VamResult> {
    ensure_in_disk(a, b)?;
    let cfg = ToleranceConfig::default();
    let scale = cfg.eq_scale(a, b);
    if (a - b).abs() <= scale {
        return Err(Error::CoincidentPoints);
    }

    let prod = a * b.conj();
    let (x, y) = (prod.re, prod.im);
    let dd = (a - b).norm_sqr();
    let coeff_a = 4.0 * (dd - y * y);
    let coeff_b = 8.0 * y * (1.0 - x);
    let coeff_c = 4.0 * (a.norm_sqr() + b.norm_sqr() - 1.0 - x * x);

    let disc_closed = 64.0 * dd * (1.0 - a.norm_sqr()) * (1.0 - b.norm_sqr());
    let disc_raw = coeff_b * coeff_b - 4.0 * coeff_a * coeff_c;
    let disc_residual = (disc_raw - disc_closed).abs() / disc_closed;
    debug_assert!(disc_residual < 1e-10);

    let roots: [f64; 2];
    if coeff_a.abs() <= 1e-12 * 4.0 * dd {
        // Mathematically A > 0 for distinct interior points; fall back to
        // the linear root if roundoff ever annihilates it.
        if coeff_b.abs() <= 1e-12 * 4.0 * dd {
            return Err(Error::DegenerateLeadingCoefficient);
        }
        let t = -coeff_c / coeff_b;
        roots = [t, t];
    } else {
        let sq = libm::sqrt(disc_closed);
        let q = -0.5 * (coeff_b + libm::copysign(sq, coeff_b));
        if q == 0.0 {
            roots = [0.0, 0.0];
        } else {
            roots = [coeff_c / q, q / coeff_a]; // |roots[0]| <= |roots[1]|
        }
    }

    let evaluate = |t: f64| -> (f64, Point, Point) {
        let p = a + (b - a).mul_i() * t;
        let center = (p + b) * 0.5; // [p, b] is a diameter
        let q = center.unit(); // tangency point of the inscribed circle
        (geom::angle_unchecked(q, a, b), p, q)
    };

    let tie = (roots[0].abs() - roots[1].abs()).abs() <= cfg.root_tol * (1.0 + roots[1].abs());
    let (t, (value, p, q)) = if tie {
        // Both roots subtend the same angle; keep the larger evaluation.
        let e0 = evaluate(roots[0]);
        let e1 = evaluate(roots[1]);
        if e0.0 >= e1.0 {
            (roots[0], e0)
        } else {
            (roots[1], e1)
        }
    } else {
        (roots[0], evaluate(roots[0]))
    };

    let mut diagnostics = Diagnostics::default();
    diagnostics.push("discriminant", disc_closed);
    diagnostics.push("discriminant_residual", disc_residual);
    diagnostics.push("t", t);
    if (p - a).abs() > scale && (p - b).abs() > scale {
        diagnostics.push("p_angle", geom::angle_unchecked(p, a, b));
    }
    Ok(VamResult {
        value,
        extremal_point: Some(q),
        route: Route::Quadratic,
        diagnostics,
    })
}

/// Two-sided bounds on `tan(v(a,b)/2)`:
///
/// `(1+|m|) th(rho/4) <= tan(v/2) <= min((1+|m|)/2 sh(rho/2), sqrt((1+|m|)/(1-|m|)) th(rho/4))`,
///
/// with equality of the two sides exactly when `m = 0`.
pub fn vam_bounds(a: Point, b: Point) -> Result<(f64, f64)> {
    let u = sinh_half_rho(a, b)?;
    let m = chord_midpoint(a, b)?.abs();
    // th(rho/4) = u / (1 + sqrt(1 + u^2))
    let th_quarter = u / (1.0 + libm::sqrt(1.0 + u * u));
    let lower = (1.0 + m) * th_quarter;
    let upper = ((1.0 + m) / 2.0 * u).min(libm::sqrt((1.0 + m) / (1.0 - m)) * th_quarter);
    Ok((lower, upper))
}
