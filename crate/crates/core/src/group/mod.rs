//! Exact models of SE(3) and its rotation and translation subgroups, the
//! adjoint action on multi-screws, and invariance checks.

mod element;
mod invariance;
mod layout;
mod pullback;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poly::PolyError;

pub use element::{
    apply_adjoint, cross, identity, mat_mul, mat_vec, skew, EuclideanElement, Matrix3, Matrix6, Quaternion,
    QuaternionElement, Rotation,
};
pub use invariance::{
    check_invariant_sampled, check_invariant_symbolic, random_element, Counterexample, SampleReport, DEFAULT_SAMPLES,
    DEFAULT_SEED,
};
pub use pullback::{pullback, PullbackSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("the zero quaternion does not define a rotation")]
    ZeroQuaternion,
    #[error("matrix is not a rotation (RᵀR ≠ I or det ≠ 1)")]
    NotARotation,
    #[error("cannot parse group element: {0}")]
    Parse(String),
    #[error("{0} pullbacks are not supported for subalgebra construction")]
    UnsupportedKind(ActionKind),
    #[error("variable `{0}` is not a screw or vector coordinate")]
    UnknownCoordinate(String),
    #[error("coordinate block `{0}` is incomplete")]
    IncompleteBlock(String),
    #[error("at least one sample is required")]
    NoSamples,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Which group acts: all of SE(3), or one of its two subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    FullAdjoint,
    RotationSub,
    TranslationSub,
}

impl ActionKind {
    pub fn rotates(self) -> bool {
        self != ActionKind::TranslationSub
    }

    pub fn translates(self) -> bool {
        self != ActionKind::RotationSub
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionKind::FullAdjoint => "se3",
            ActionKind::RotationSub => "so3",
            ActionKind::TranslationSub => "t3",
        })
    }
}

impl FromStr for ActionKind {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "se3" => Ok(ActionKind::FullAdjoint),
            "so3" => Ok(ActionKind::RotationSub),
            "t3" => Ok(ActionKind::TranslationSub),
            other => Err(GroupError::Parse(format!(
                "unknown group `{other}` (expected se3, so3 or t3)"
            ))),
        }
    }
}
