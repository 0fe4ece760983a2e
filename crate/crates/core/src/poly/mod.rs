//! Sparse multivariate polynomials with exact coefficients.
//!
//! A [`Polynomial`] is a map from [`Monomial`] to nonzero coefficient over a
//! shared [`VariableSet`]. Leading terms are always taken with respect to an
//! explicit [`TermOrder`]; the map itself is kept in the natural
//! lexicographic order of the variable set so iteration is deterministic.

mod format;
mod monomial;
mod order;
mod parse;
mod varset;

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::scalar::Scalar;

pub use format::format;
pub use monomial::Monomial;
pub use order::TermOrder;
pub use parse::{identifiers, parse};
pub use varset::VariableSet;

pub(crate) use varset::same_vars;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("coefficient at position {pos} does not fit the scalar type")]
    CoefficientOverflow { pos: usize },
    #[error("polynomials live over different variable sets")]
    MismatchedVariables,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("no value given for variable `{0}`")]
    MissingValue(String),
    #[error("variable `{0}` listed twice")]
    DuplicateVariable(String),
    #[error("`{0}` is not a valid variable name")]
    InvalidVariableName(String),
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
}

/// Element of `S[x_1, ..., x_n]` for the variables of a [`VariableSet`].
#[derive(Clone, Debug)]
pub struct Polynomial<S> {
    vars: Arc<VariableSet>,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(vars: &Arc<VariableSet>) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VariableSet>) -> Self {
        Self::constant(vars, S::one())
    }

    pub fn constant(vars: &Arc<VariableSet>, c: S) -> Self {
        Self::from_terms(vars, [(Monomial::one(vars.len()), c)])
    }

    pub fn var(vars: &Arc<VariableSet>, idx: usize) -> Self {
        Self::from_terms(vars, [(Monomial::var(vars.len(), idx), S::one())])
    }

    pub fn var_named(vars: &Arc<VariableSet>, name: &str) -> Result<Self, PolyError> {
        let idx = vars.index_of(name).ok_or_else(|| PolyError::UnknownVariable {
            name: name.to_string(),
            pos: 0,
        })?;
        Ok(Self::var(vars, idx))
    }

    /// Sums the given terms, dropping whatever cancels.
    pub fn from_terms<I>(vars: &Arc<VariableSet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, S)>,
    {
        let mut acc: BTreeMap<Monomial, S> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial length does not match variable set");
            accumulate(&mut acc, m, &c);
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial {
            vars: vars.clone(),
            terms: acc,
        }
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the natural lexicographic order of the variable set,
    /// ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Whether any term involves variable `idx`.
    pub fn uses_variable(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.uses(idx))
    }

    /// Largest monomial under `order` with its coefficient.
    pub fn leading_term(&self, order: &TermOrder) -> Result<(&Monomial, &S), PolyError> {
        if !order.compatible_with(&self.vars) {
            return Err(PolyError::MismatchedVariables);
        }
        let mut iter = self.terms.iter();
        let mut best = iter.next().ok_or(PolyError::ZeroPolynomial)?;
        for t in iter {
            if order.cmp(t.0, best.0).is_gt() {
                best = t;
            }
        }
        Ok(best)
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<&Monomial, PolyError> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self, order: &TermOrder) -> Result<Self, PolyError> {
        match self.leading_term(order) {
            Ok((_, lc)) => {
                let inv = S::one() / lc.clone();
                Ok(self.scale(&inv))
            }
            Err(PolyError::ZeroPolynomial) => Ok(self.clone()),
            Err(e) => Err(e),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul_ref(c))).collect(),
        }
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b.mul_ref(c))).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c);
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: HashMap<Monomial, S> = HashMap::with_capacity(small.terms.len() * large.terms.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let c = ca.mul_ref(cb);
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => e.get_mut().add_assign_ref(&c),
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Ok(Polynomial {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        let terms = self.terms().filter(|(m, _)| m.exponents()[idx] > 0).map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            let k = e[idx];
            e[idx] -= 1;
            (Monomial::from_exponents(e), c.mul_ref(&S::from_i64(k.into())))
        });
        Self::from_terms(&self.vars, terms)
    }

    /// Evaluates at a point given by position in the variable set.
    pub fn evaluate(&self, point: &[S]) -> Result<S, PolyError> {
        if point.len() != self.vars.len() {
            let missing = self.vars.names().get(point.len()).cloned().unwrap_or_default();
            return Err(PolyError::MissingValue(missing));
        }
        let mut total = S::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v = v.mul_ref(x);
                }
            }
            total.add_assign_ref(&v);
        }
        Ok(total)
    }

    /// Evaluates at a named assignment; only variables that occur in `self`
    /// need a value.
    pub fn evaluate_named(&self, point: &HashMap<String, S>) -> Result<S, PolyError> {
        let values = self
            .vars
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| match point.get(n) {
                Some(v) => Ok(v.clone()),
                None if !self.uses_variable(i) => Ok(S::zero()),
                None => Err(PolyError::MissingValue(n.clone())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.evaluate(&values)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    ///
    /// Only variables that actually occur need an image; all images must
    /// live over `target`.
    pub fn substitute(&self, target: &Arc<VariableSet>, images: &[Option<Polynomial<S>>]) -> Result<Self, PolyError> {
        for img in images.iter().flatten() {
            if !same_vars(img.vars(), target) {
                return Err(PolyError::MismatchedVariables);
            }
        }
        let mut max_exp = vec![0u16; self.vars.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let mut powers: Vec<Vec<Polynomial<S>>> = Vec::with_capacity(self.vars.len());
        for (i, &top) in max_exp.iter().enumerate() {
            let mut p = Vec::new();
            if top > 0 {
                let img = images
                    .get(i)
                    .and_then(Option::as_ref)
                    .ok_or_else(|| PolyError::MissingImage(self.vars.name(i).to_string()))?;
                p.push(Polynomial::one(target));
                for k in 1..=top as usize {
                    let next = &p[k - 1] * img;
                    p.push(next);
                }
            }
            powers.push(p);
        }
        let mut acc: BTreeMap<Monomial, S> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            for (tm, tc) in term.terms {
                accumulate(&mut acc, tm, &tc);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            vars: target.clone(),
            terms: acc,
        })
    }

    /// Substitution keyed by variable name.
    pub fn substitute_named(
        &self,
        target: &Arc<VariableSet>,
        images: &HashMap<String, Polynomial<S>>,
    ) -> Result<Self, PolyError> {
        let by_index: Vec<Option<Polynomial<S>>> = self.vars.names().iter().map(|n| images.get(n).cloned()).collect();
        self.substitute(target, &by_index)
    }

    /// Re-expresses the polynomial over a variable set containing all of
    /// its used variables (matched by name).
    pub fn embed(&self, target: &Arc<VariableSet>) -> Result<Self, PolyError> {
        if same_vars(&self.vars, target) {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            let used = self.uses_variable(i);
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if !used => map.push(None),
                None => return Err(PolyError::MissingImage(name.clone())),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = x;
                }
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Self::from_terms(target, terms))
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if same_vars(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(PolyError::MismatchedVariables)
        }
    }
}

fn accumulate<S: Scalar>(acc: &mut BTreeMap<Monomial, S>, m: Monomial, c: &S) {
    match acc.entry(m) {
        std::collections::btree_map::Entry::Occupied(mut e) => e.get_mut().add_assign_ref(c),
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

impl<S: PartialEq> PartialEq for Polynomial<S> {
    fn eq(&self, other: &Self) -> bool {
        same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;

    fn neg(self) -> Polynomial<S> {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Polynomial<S>;

    fn neg(self) -> Polynomial<S> {
        -&self
    }
}

// Operators panic on mismatched variable sets; use the `checked_*` methods
// where that can happen.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<S: Scalar> $trait<&Polynomial<S>> for &Polynomial<S> {
            type Output = Polynomial<S>;

            fn $method(self, rhs: &Polynomial<S>) -> Polynomial<S> {
                self.$checked(rhs)
                    .expect("polynomials over different variable sets")
            }
        }

        impl<S: Scalar> $trait<Polynomial<S>> for Polynomial<S> {
            type Output = Polynomial<S>;

            fn $method(self, rhs: Polynomial<S>) -> Polynomial<S> {
                (&self).$method(&rhs)
            }
        }

        impl<S: Scalar> $trait<&Polynomial<S>> for Polynomial<S> {
            type Output = Polynomial<S>;

            fn $method(self, rhs: &Polynomial<S>) -> Polynomial<S> {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_frac(n, d)
    }

    fn xy() -> Arc<VariableSet> {
        VariableSet::new(["x", "y"]).unwrap()
    }

    #[test]
    fn additive_inverse_and_unit() {
        let vs = xy();
        let f = parse::<BigRational>("3/2*x^2*y - y + 7", &vs).unwrap();
        assert!((&f + &-&f).is_zero());
        assert_eq!(&f * &P::one(&vs), f);
    }

    #[test]
    fn binomial_square() {
        let vs = xy();
        let s = parse::<BigRational>("x + y", &vs).unwrap();
        let expected = parse::<BigRational>("x^2 + 2*x*y + y^2", &vs).unwrap();
        assert_eq!(s.pow(2), expected);
        assert_eq!(s.pow(0), P::one(&vs));
    }

    #[test]
    fn mismatched_sets_are_errors() {
        let a = P::var(&xy(), 0);
        let b = P::var(&VariableSet::new(["x", "z"]).unwrap(), 0);
        assert_eq!(a.checked_add(&b), Err(PolyError::MismatchedVariables));
        assert_eq!(a.checked_mul(&b), Err(PolyError::MismatchedVariables));
    }

    #[test]
    fn leading_terms() {
        let vs = VariableSet::screws(1);
        let order = TermOrder::lex(&vs);
        let klein = parse::<BigRational>("w11*v11 + w12*v12 + w13*v13", &vs).unwrap();
        let (m, c) = klein.leading_term(&order).unwrap();
        assert_eq!(
            m,
            &parse::<BigRational>("w11*v11", &vs)
                .unwrap()
                .terms()
                .next()
                .unwrap()
                .0
                .clone()
        );
        assert_eq!(c, &q(1, 1));
        let five = P::constant(&vs, q(5, 1));
        let (m, c) = five.leading_term(&order).unwrap();
        assert!(m.is_one());
        assert_eq!(c, &q(5, 1));
        assert_eq!(
            P::zero(&vs).leading_term(&order).unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn substitution_basics() {
        let vs = xy();
        let f = parse::<BigRational>("x*y + y", &vs).unwrap();
        let id: Vec<_> = (0..2).map(|i| Some(P::var(&vs, i))).collect();
        assert_eq!(f.substitute(&vs, &id).unwrap(), f);
        let kill_x = vec![Some(P::zero(&vs)), Some(P::var(&vs, 1))];
        assert_eq!(f.substitute(&vs, &kill_x).unwrap(), P::var(&vs, 1));
        let missing = vec![Some(P::zero(&vs)), None];
        assert_eq!(f.substitute(&vs, &missing), Err(PolyError::MissingImage("y".into())));
    }

    #[test]
    fn evaluation() {
        let vs = VariableSet::screws(1);
        let klein = parse::<BigRational>("w11*v11 + w12*v12 + w13*v13", &vs).unwrap();
        let killing = parse::<BigRational>("w11^2 + w12^2 + w13^2", &vs).unwrap();
        let point: Vec<_> = [0, 0, 1, 0, 0, 3].iter().map(|&x| q(x, 1)).collect();
        assert_eq!(klein.evaluate(&point).unwrap(), q(3, 1));
        assert_eq!(killing.evaluate(&point).unwrap(), q(1, 1));
        let mut named = HashMap::new();
        named.insert("w11".to_string(), q(1, 1));
        assert_eq!(klein.evaluate_named(&named), Err(PolyError::MissingValue("w12".into())));
        named.insert("w12".to_string(), q(2, 1));
        named.insert("w13".to_string(), q(-1, 2));
        assert_eq!(killing.evaluate_named(&named).unwrap(), q(21, 4));
    }

    #[test]
    fn embed_by_name() {
        let small = VariableSet::new(["y"]).unwrap();
        let f = parse::<BigRational>("2*y^3", &small).unwrap();
        let g = f.embed(&xy()).unwrap();
        assert_eq!(g, parse::<BigRational>("2*y^3", &xy()).unwrap());
        assert!(P::var(&xy(), 0).embed(&small).is_err());
    }
}
