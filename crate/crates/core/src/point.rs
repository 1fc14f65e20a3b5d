//! Points of the plane as complex numbers.
//!
//! Everything in this crate is expressed in terms of complex arithmetic on
//! [`Point`]: conjugation, moduli, rotations. The float functions come from
//! `libm` so the crate stays `no_std` and results are bit-identical across
//! platforms.

use core::ops::{Add, Div, Mul, Neg, Sub};

/// A point of the plane, stored as the complex number `re + im*i`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub re: f64,
    pub im: f64,
}

impl Point {
    pub const ZERO: Point = Point { re: 0.0, im: 0.0 };
    pub const ONE: Point = Point { re: 1.0, im: 0.0 };
    pub const I: Point = Point { re: 0.0, im: 1.0 };

    #[inline]
    pub const fn new(re: f64, im: f64) -> Point {
        Point { re, im }
    }

    /// `r * e^{i theta}`.
    #[inline]
    pub fn from_polar(r: f64, theta: f64) -> Point {
        Point::new(r * libm::cos(theta), r * libm::sin(theta))
    }

    #[inline]
    pub fn conj(self) -> Point {
        Point::new(self.re, -self.im)
    }

    /// Squared modulus `|z|^2`.
    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Modulus `|z|`.
    #[inline]
    pub fn abs(self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Principal argument in `(-pi, pi]`.
    #[inline]
    pub fn arg(self) -> f64 {
        libm::atan2(self.im, self.re)
    }

    /// Real inner product `Re(conj(self) * other)`.
    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.re * other.re + self.im * other.im
    }

    /// Planar cross product `Im(conj(self) * other)`.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.re * other.im - self.im * other.re
    }

    /// `z / |z|`. Caller guarantees `z != 0`.
    #[inline]
    pub fn unit(self) -> Point {
        self / self.abs()
    }

    /// Multiplication by `i` (rotation by a quarter turn).
    #[inline]
    pub fn mul_i(self) -> Point {
        Point::new(-self.im, self.re)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// True if strictly inside the unit disk.
    #[inline]
    pub fn in_unit_disk(self) -> bool {
        self.norm_sqr() < 1.0
    }
}

impl From<(f64, f64)> for Point {
    fn from((re, im): (f64, f64)) -> Point {
        Point::new(re, im)
    }
}

impl From<f64> for Point {
    fn from(re: f64) -> Point {
        Point::new(re, 0.0)
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Point) -> Point {
        Point::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.re, -self.im)
    }
}

impl Mul for Point {
    type Output = Point;
    #[inline]
    fn mul(self, rhs: Point) -> Point {
        Point::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.re * rhs, self.im * rhs)
    }
}

impl Mul<Point> for f64 {
    type Output = Point;
    #[inline]
    fn mul(self, rhs: Point) -> Point {
        rhs * self
    }
}

impl Div for Point {
    type Output = Point;
    #[inline]
    fn div(self, rhs: Point) -> Point {
        let d = rhs.norm_sqr();
        Point::new(
            (self.re * rhs.re + self.im * rhs.im) / d,
            (self.im * rhs.re - self.re * rhs.im) / d,
        )
    }
}

impl Div<f64> for Point {
    type Output = Point;
    #[inline]
    fn div(self, rhs: f64) -> Point {
        Point::new(self.re / rhs, self.im / rhs)
    }
}
