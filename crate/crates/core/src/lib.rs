//! Exact polynomial invariants of the Euclidean group acting on multi-screws.
//!
//! The crate is generic over an exact coefficient field ([`Scalar`]); the
//! aliases below fix it to arbitrary precision rationals, which is what the
//! catalogs, checks, and command-line front end use.

pub mod group;
pub mod poly;
pub mod sagbi;
pub mod scalar;
pub mod screw;
pub mod verify;

pub use scalar::Scalar;

/// Arbitrary precision rational, the default coefficient field.
pub type Rational = num_rational::BigRational;
pub type Poly = poly::Polynomial<Rational>;
