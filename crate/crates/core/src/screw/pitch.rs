use super::{ScrewError, Twist};
use crate::group::EuclideanElement;
use crate::scalar::Scalar;

/// `ω·v / ω·ω`, with the two degenerate cases kept apart.
#[derive(Clone, Debug, PartialEq)]
pub enum Pitch<S> {
    Finite(S),
    Infinite,
    UndefinedZeroTwist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JointType {
    /// Revolute, pitch 0.
    R,
    /// Prismatic, infinite pitch.
    P,
    /// Helical, finite nonzero pitch.
    H,
}

pub fn pitch<S: Scalar>(t: &Twist<S>) -> Pitch<S> {
    let killing = t.killing();
    if !killing.is_zero() {
        Pitch::Finite(t.klein() / killing)
    } else if t.vee.iter().any(|x| !x.is_zero()) {
        Pitch::Infinite
    } else {
        Pitch::UndefinedZeroTwist
    }
}

pub fn joint_type<S: Scalar>(t: &Twist<S>) -> Result<JointType, ScrewError> {
    match pitch(t) {
        Pitch::Finite(p) if p.is_zero() => Ok(JointType::R),
        Pitch::Finite(_) => Ok(JointType::H),
        Pitch::Infinite => Ok(JointType::P),
        Pitch::UndefinedZeroTwist => Err(ScrewError::ZeroTwist),
    }
}

pub fn pitch_invariance_check<S: Scalar>(g: &EuclideanElement<S>, t: &Twist<S>) -> bool {
    pitch(&g.apply_twist(t)) == pitch(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn classification() {
        let rot = Twist::<Rational>::from_ints([0, 0, 1], [0, 0, 0]);
        let slide = Twist::<Rational>::from_ints([0, 0, 0], [1, 0, 0]);
        let helix = Twist::<Rational>::from_ints([0, 0, 1], [0, 0, 3]);
        assert_eq!(pitch(&rot), Pitch::Finite(Rational::from_i64(0)));
        assert_eq!(pitch(&slide), Pitch::Infinite);
        assert_eq!(pitch(&helix), Pitch::Finite(Rational::from_i64(3)));
        assert_eq!(joint_type(&rot), Ok(JointType::R));
        assert_eq!(joint_type(&slide), Ok(JointType::P));
        assert_eq!(joint_type(&helix), Ok(JointType::H));
        let zero = Twist::<Rational>::from_ints([0, 0, 0], [0, 0, 0]);
        assert_eq!(pitch(&zero), Pitch::UndefinedZeroTwist);
        assert_eq!(joint_type(&zero), Err(ScrewError::ZeroTwist));
        assert!(pitch_invariance_check(&EuclideanElement::identity(), &helix));
    }
}
