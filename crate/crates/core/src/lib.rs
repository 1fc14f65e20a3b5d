//! Visual angle metric of the unit disk.
//!
//! For `a`, `b` in the unit disk, the visual angle metric is the supremum
//! over boundary points `z` of the angle at `z` subtended by `a` and `b`.
//! This crate computes it through several independent closed forms (see
//! [`vam`]), provides the supporting hyperbolic toolkit of the disk
//! ([`hyperbolic`], [`geom`]), the special functions controlling distance
//! distortion under `K`-quasiregular self-maps ([`distortion`]), and a
//! brute-force boundary-maximization oracle with seeded random sampling
//! ([`oracle`]) against which everything is cross-validated.
//!
//! The crate is `no_std` (with `alloc`); all float math goes through
//! `libm`, so results do not depend on the platform's libm.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod config;
pub mod distortion;
pub mod error;
pub mod geom;
pub mod hyperbolic;
pub mod oracle;
pub mod point;
pub mod selfcheck;
pub mod vam;

pub use config::ToleranceConfig;
pub use error::{Error, Result};
pub use point::Point;
