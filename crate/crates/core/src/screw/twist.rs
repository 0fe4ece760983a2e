use std::fmt;

use crate::scalar::{parse_scalar, Scalar};

use super::ScrewError;

/// Plücker coordinates `(ω, v)` of a twist. The zero twist is allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct Twist<S> {
    pub omega: [S; 3],
    pub vee: [S; 3],
}

impl<S: Scalar> Twist<S> {
    pub fn new(omega: [S; 3], vee: [S; 3]) -> Self {
        Twist { omega, vee }
    }

    pub fn from_ints(omega: [i64; 3], vee: [i64; 3]) -> Self {
        Twist {
            omega: omega.map(S::from_i64),
            vee: vee.map(S::from_i64),
        }
    }

    /// `ω·v`
    pub fn klein(&self) -> S {
        dot(&self.omega, &self.vee)
    }

    /// `ω·ω`
    pub fn killing(&self) -> S {
        dot(&self.omega, &self.omega)
    }

    pub fn coords(&self) -> [S; 6] {
        let [a, b, c] = self.omega.clone();
        let [d, e, f] = self.vee.clone();
        [a, b, c, d, e, f]
    }
}

pub(crate) fn dot<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> S {
    let mut s = a[0].mul_ref(&b[0]);
    s.add_assign_ref(&a[1].mul_ref(&b[1]));
    s.add_assign_ref(&a[2].mul_ref(&b[2]));
    s
}

/// An ordered tuple of twists, indexed from 1 in variable names.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiScrew<S> {
    pub twists: Vec<Twist<S>>,
}

impl<S: Scalar> MultiScrew<S> {
    pub fn new(twists: Vec<Twist<S>>) -> Result<Self, ScrewError> {
        if twists.is_empty() {
            return Err(ScrewError::EmptyMultiScrew);
        }
        Ok(MultiScrew { twists })
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    /// Values for [`VariableSet::screws`](crate::poly::VariableSet::screws):
    /// all `ω` components first, then all `v` components.
    pub fn point(&self) -> Vec<S> {
        let w = self.twists.iter().flat_map(|t| t.omega.iter().cloned());
        let v = self.twists.iter().flat_map(|t| t.vee.iter().cloned());
        w.chain(v).collect()
    }

    /// Parses `m` lines of six rationals `w1 w2 w3 v1 v2 v3`; blank lines
    /// and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, ScrewError> {
        let mut twists = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let vals: Vec<&str> = line.split_whitespace().collect();
            if vals.len() != 6 {
                return Err(ScrewError::Parse {
                    line: n + 1,
                    message: format!("expected 6 rationals, found {}", vals.len()),
                });
            }
            let parsed = vals
                .iter()
                .map(|v| {
                    parse_scalar::<S>(v).ok_or_else(|| ScrewError::Parse {
                        line: n + 1,
                        message: format!("`{v}` is not a rational"),
                    })
                })
                .collect::<Result<Vec<S>, _>>()?;
            let mut it = parsed.into_iter();
            let mut next3 = || [(); 3].map(|_| it.next().expect("six values"));
            let omega = next3();
            let vee = next3();
            twists.push(Twist { omega, vee });
        }
        Self::new(twists)
    }
}

impl<S: Scalar> fmt::Display for MultiScrew<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.twists {
            let c: Vec<String> = t.coords().iter().map(ToString::to_string).collect();
            writeln!(f, "{}", c.join(" "))?;
        }
        Ok(())
    }
}
