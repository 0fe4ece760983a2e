//! Exact coefficient fields.
//!
//! Every computation in this crate is an exact identity, so the scalar
//! abstraction only admits fields with exact equality. Arbitrary precision
//! rationals are the default; fixed-width rationals are available for fast
//! experiments where overflow is known not to occur.

use std::fmt::{Debug, Display};

use num_bigint::{BigInt, Sign};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field usable as polynomial coefficients and group-element entries.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Signed + ToPrimitive + Send + Sync + 'static
{
    /// Builds `numer / denom`, or `None` when the value does not fit or
    /// `denom` is zero.
    fn from_bigints(numer: &BigInt, denom: &BigInt) -> Option<Self>;

    fn from_i64(value: i64) -> Self;

    /// Exact square root when the value is the square of a field element.
    fn sqrt_exact(&self) -> Option<Self>;

    /// Numerator and (positive) denominator in lowest terms.
    fn to_bigints(&self) -> (BigInt, BigInt);

    fn from_frac(numer: i64, denom: i64) -> Self {
        Self::from_i64(numer) / Self::from_i64(denom)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.clone() + other.clone();
    }
}

fn big_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Scalar for BigRational {
    fn from_bigints(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        Some(Ratio::new(numer.clone(), denom.clone()))
    }

    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(BigInt::from(value))
    }

    fn sqrt_exact(&self) -> Option<Self> {
        let n = big_sqrt_exact(self.numer())?;
        let d = big_sqrt_exact(self.denom())?;
        Some(Ratio::new(n, d))
    }

    fn to_bigints(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

macro_rules! impl_fixed_ratio {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_bigints(numer: &BigInt, denom: &BigInt) -> Option<Self> {
                let n: $int = numer.try_into().ok()?;
                let d: $int = denom.try_into().ok()?;
                if d == 0 {
                    return None;
                }
                Some(Ratio::new(n, d))
            }

            fn from_i64(value: i64) -> Self {
                Ratio::from_integer(value as $int)
            }

            fn sqrt_exact(&self) -> Option<Self> {
                let n = big_sqrt_exact(&BigInt::from(*self.numer()))?;
                let d = big_sqrt_exact(&BigInt::from(*self.denom()))?;
                Self::from_bigints(&n, &d)
            }

            fn to_bigints(&self) -> (BigInt, BigInt) {
                (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }
    };
}

impl_fixed_ratio!(i64);
impl_fixed_ratio!(i128);

/// Parses `p`, `-p`, `p/q` or `-p/q` with decimal integers.
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    if denom.starts_with(['+', '-']) {
        return None;
    }
    let n: BigInt = numer.parse().ok()?;
    let d: BigInt = denom.parse().ok()?;
    S::from_bigints(&n, &d)
}

/// True when the stored fraction is in lowest terms with a positive
/// denominator.
pub fn is_reduced<S: Scalar>(value: &S) -> bool {
    let (n, d) = value.to_bigints();
    if d.sign() != Sign::Plus {
        return false;
    }
    if n.is_zero() {
        return d.is_one();
    }
    num_integer::Integer::gcd(&n, &d).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn big_rationals_are_stored_reduced() {
        let x = BigRational::from_bigints(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        assert_eq!(x.to_bigints(), (BigInt::from(-3), BigInt::from(2)));
        assert!(is_reduced(&x));
        let z = BigRational::from_bigints(&BigInt::from(0), &BigInt::from(7)).unwrap();
        assert_eq!(z.to_bigints(), (BigInt::from(0), BigInt::from(1)));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(BigRational::from_bigints(&BigInt::from(1), &BigInt::from(0)).is_none());
        assert!(Rational64::from_bigints(&BigInt::from(1), &BigInt::from(0)).is_none());
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        let huge = BigInt::from(i64::MAX) * 4;
        assert!(Rational64::from_bigints(&huge, &BigInt::from(1)).is_none());
    }

    #[test]
    fn parses_rational_literals() {
        assert_eq!(parse_scalar::<BigRational>("-6/4"), Some(BigRational::from_frac(-3, 2)));
        assert_eq!(parse_scalar::<BigRational>(" 7 "), Some(BigRational::from_frac(7, 1)));
        assert_eq!(parse_scalar::<BigRational>("1/0"), None);
        assert_eq!(parse_scalar::<BigRational>("1/-2"), None);
        assert_eq!(parse_scalar::<BigRational>("x"), None);
    }

    #[test]
    fn exact_square_roots() {
        let x = BigRational::from_frac(9, 16);
        assert_eq!(x.sqrt_exact(), Some(BigRational::from_frac(3, 4)));
        assert_eq!(BigRational::from_frac(2, 1).sqrt_exact(), None);
        assert_eq!(BigRational::from_frac(-4, 1).sqrt_exact(), None);
        assert_eq!(Rational64::from_frac(25, 4).sqrt_exact(), Some(Rational64::new(5, 2)));
    }
}
