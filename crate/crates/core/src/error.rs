//! Error type shared by all modules.

use core::fmt;

/// Everything that can go wrong in this crate.
///
/// The variants mirror the preconditions of the individual operations;
/// callers that dispatch between formulas (see [`crate::vam::vam`]) use them
/// to reroute rather than fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    /// Angle vertex coincides with one of the rays' endpoints.
    DegenerateAngle,
    /// The two lines are parallel or identical.
    ParallelLines,
    /// Circumcenter of (nearly) collinear points.
    CollinearPoints,
    /// A line was specified by two coincident points.
    DegenerateLine,
    /// `|a| = |b|` where distinct moduli are required.
    EqualModulus,
    /// `||a| - |b||` exceeds tolerance where equal moduli are required.
    NotEqualModulus,
    /// The line through the two points passes through the origin.
    CollinearWithOrigin,
    /// The two points are not collinear with the origin.
    NotCollinear,
    /// Evaluation at (or too close to) a pole of the map.
    PoleInput,
    /// A point lies outside the open unit disk.
    OutsideDisk,
    /// Two points coincide where distinct points are required.
    CoincidentPoints,
    /// A cross-ratio denominator pair coincides.
    DegenerateQuadruple,
    /// Quadratic with vanishing leading and linear coefficients.
    DegenerateLeadingCoefficient,
    /// Scalar argument outside the function's domain.
    DomainError,
    /// Iteration cap exceeded before reaching tolerance.
    ConvergenceFailure,
    /// The next point of the sequence would leave the unit disk.
    ChordExhausted,
    /// NaN or infinity in an input.
    NonFinite,
    /// Invalid tolerance or context configuration.
    InvalidConfig,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::DegenerateAngle => "angle vertex coincides with a ray endpoint",
            Error::ParallelLines => "lines are parallel or identical",
            Error::CollinearPoints => "points are collinear",
            Error::DegenerateLine => "line requires two distinct points",
            Error::EqualModulus => "points have equal modulus",
            Error::NotEqualModulus => "points do not have equal modulus",
            Error::CollinearWithOrigin => "points are collinear with the origin",
            Error::NotCollinear => "points are not collinear with the origin",
            Error::PoleInput => "evaluation at a pole",
            Error::OutsideDisk => "point outside the unit disk",
            Error::CoincidentPoints => "points coincide",
            Error::DegenerateQuadruple => "cross-ratio denominator pair coincides",
            Error::DegenerateLeadingCoefficient => "quadratic degenerates",
            Error::DomainError => "argument outside function domain",
            Error::ConvergenceFailure => "iteration limit reached",
            Error::ChordExhausted => "sequence would leave the unit disk",
            Error::NonFinite => "non-finite input",
            Error::InvalidConfig => "invalid configuration",
        };
        f.write_str(msg)
    }
}

pub type Result<T> = core::result::Result<T, Error>;
