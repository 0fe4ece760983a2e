use std::fmt;

use super::twist::dot;
use super::{MultiScrew, ScrewError};
use crate::scalar::Scalar;

/// `numerator / √radicand`, kept exact.
#[derive(Clone, Debug, PartialEq)]
pub struct SqrtQuotient<S> {
    pub numerator: S,
    pub radicand: S,
}

impl<S: Scalar> SqrtQuotient<S> {
    /// The value, when the radicand is a rational square.
    pub fn exact(&self) -> Option<S> {
        self.radicand.sqrt_exact().map(|r| self.numerator.clone() / r)
    }

    /// Exact square of the value.
    pub fn squared(&self) -> S {
        self.numerator.mul_ref(&self.numerator) / self.radicand.clone()
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(v) = self.exact() {
            return v.to_f64().unwrap_or(f64::NAN);
        }
        let n = self.numerator.to_f64().unwrap_or(f64::NAN);
        let r = self.radicand.to_f64().unwrap_or(f64::NAN);
        n / r.sqrt()
    }
}

impl<S: Scalar> fmt::Display for SqrtQuotient<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "({})/sqrt({})", self.numerator, self.radicand),
        }
    }
}

/// Twist angle and displacement of a screw pair, from the pair invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct DhPairReport<S> {
    /// `ω1·v2 + ω2·v1`
    pub klein_cross: S,
    /// `ω1·ω1`, `ω1·ω2`, `ω2·ω2`
    pub dots: [S; 3],
    pub cos_alpha: SqrtQuotient<S>,
    pub d_sin_alpha: SqrtQuotient<S>,
    pub alpha: f64,
    /// `None` for parallel axes (`sin α = 0`), where `d` is not determined.
    pub d: Option<f64>,
}

pub fn dh_invariants<S: Scalar>(pair: &MultiScrew<S>) -> Result<DhPairReport<S>, ScrewError> {
    let [s1, s2] = pair.twists.as_slice() else {
        return Err(ScrewError::NotAPair(pair.len()));
    };
    let d11 = s1.killing();
    let d22 = s2.killing();
    for (i, d) in [(1, &d11), (2, &d22)] {
        if d.is_zero() {
            return Err(ScrewError::ZeroOmega(i));
        }
    }
    let d12 = dot(&s1.omega, &s2.omega);
    let klein_cross = dot(&s1.omega, &s2.vee) + dot(&s2.omega, &s1.vee);
    let radicand = d11.mul_ref(&d22);
    let cos_alpha = SqrtQuotient {
        numerator: d12.clone(),
        radicand: radicand.clone(),
    };
    let d_sin_alpha = SqrtQuotient {
        numerator: klein_cross.clone(),
        radicand,
    };
    let cos = cos_alpha.to_f64().clamp(-1.0, 1.0);
    let sin_squared = S::one() - cos_alpha.squared();
    let d = (!sin_squared.is_zero()).then(|| d_sin_alpha.to_f64() / sin_squared.to_f64().unwrap_or(f64::NAN).sqrt());
    Ok(DhPairReport {
        klein_cross,
        dots: [d11, d12, d22],
        cos_alpha,
        d_sin_alpha,
        alpha: cos.acos(),
        d,
    })
}

/// Fifteen significant digits.
pub fn sig15(x: f64) -> String {
    format!("{x:.14e}")
}

impl<S: Scalar> fmt::Display for DhPairReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "klein_cross: {}", self.klein_cross)?;
        writeln!(f, "dot_11: {}", self.dots[0])?;
        writeln!(f, "dot_12: {}", self.dots[1])?;
        writeln!(f, "dot_22: {}", self.dots[2])?;
        writeln!(f, "cos_alpha: {}", self.cos_alpha)?;
        writeln!(f, "d_sin_alpha: {}", self.d_sin_alpha)?;
        writeln!(f, "alpha: {}", sig15(self.alpha))?;
        match self.d {
            Some(d) => writeln!(f, "d: {}", sig15(d)),
            None => writeln!(f, "d: undefined (parallel axes)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    #[test]
    fn constructed_pair() {
        // second axis through (2, 0, 0) with direction (0, 3/5, 4/5)
        let pair = MultiScrew::<Rational>::parse("0 0 1 0 0 0\n0 3/5 4/5 0 -8/5 6/5\n").unwrap();
        let r = dh_invariants(&pair).unwrap();
        assert_eq!(r.cos_alpha.exact(), Some(q(4, 5)));
        assert_eq!(r.d_sin_alpha.exact(), Some(q(6, 5)));
        assert!((r.d.unwrap() - 2.0).abs() < 1e-12);
        assert!((r.alpha - (0.8f64).acos()).abs() < 1e-15);
    }

    #[test]
    fn parallel_and_degenerate() {
        let pair = MultiScrew::<Rational>::parse("1 2 2 3 0 -3/2\n1 2 2 3 0 -3/2\n").unwrap();
        let r = dh_invariants(&pair).unwrap();
        assert_eq!(r.cos_alpha.exact(), Some(q(1, 1)));
        assert_eq!(r.d_sin_alpha.numerator, q(0, 1));
        assert_eq!(r.d, None);
        assert!(r.to_string().contains("d: undefined"));
        let zero = MultiScrew::<Rational>::parse("0 0 0 1 0 0\n0 0 1 0 0 0\n").unwrap();
        assert_eq!(dh_invariants(&zero), Err(ScrewError::ZeroOmega(1)));
        let single = MultiScrew::<Rational>::parse("0 0 1 0 0 0\n").unwrap();
        assert_eq!(dh_invariants(&single), Err(ScrewError::NotAPair(1)));
    }

    #[test]
    fn irrational_cosine_stays_exact() {
        let pair = MultiScrew::<Rational>::parse("1 0 0 0 0 0\n1 1 0 0 0 0\n").unwrap();
        let r = dh_invariants(&pair).unwrap();
        assert_eq!(r.cos_alpha.exact(), None);
        assert_eq!(r.cos_alpha.radicand, q(2, 1));
        assert_eq!(r.cos_alpha.to_string(), "(1)/sqrt(2)");
        assert_eq!(r.cos_alpha.squared(), q(1, 2));
    }
}
