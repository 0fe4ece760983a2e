//! Twists, multi-screws, pitch, catalogs of invariant polynomials, and the
//! Denavit–Hartenberg quantities of a screw pair.

mod catalog;
mod dh;
mod pitch;
mod twist;

use thiserror::Error;

pub use catalog::{
    count, describe, gram_minor, se3_generator_catalog, so3_sagbi_catalog, so3_vector_invariants,
    translation_sagbi_catalog, z_poly, Catalog, Completeness,
};
pub use dh::{dh_invariants, sig15, DhPairReport, SqrtQuotient};
pub use pitch::{joint_type, pitch, pitch_invariance_check, JointType, Pitch};
pub use twist::{MultiScrew, Twist};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScrewError {
    #[error("a multi-screw needs at least one twist")]
    EmptyMultiScrew,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("the zero twist has no joint type")]
    ZeroTwist,
    #[error("expected a screw pair, got {0} screws")]
    NotAPair(usize),
    #[error("screw {0} has ω = 0")]
    ZeroOmega(usize),
    #[error("index {index} outside 1..={m}")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("index lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("no catalog for {0} screws or vectors")]
    UnsupportedCount(usize),
}
