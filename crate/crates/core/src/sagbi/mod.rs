//! Subalgebra bases: subduction, tête-à-têtes and the completion loop.
//!
//! A [`GeneratorSet`] is a list of monic polynomials with pairwise distinct
//! leading monomials under a fixed [`TermOrder`]. Subduction is the
//! subalgebra analogue of polynomial division; tête-à-têtes play the role of
//! S-polynomials in the completion procedure.

mod construct;
mod io;
mod subduct;
mod tete;

use std::sync::Arc;

use thiserror::Error;

use crate::poly::{Monomial, PolyError, Polynomial, TermOrder, VariableSet};
use crate::scalar::Scalar;

pub use construct::{is_member, sagbi_construct, verify_sagbi, Membership, SagbiResult};
pub use io::{format_basis_file, format_result, parse_basis_file, BasisFile};
pub use subduct::{subduct, Certificate, CertificateTerm, SubductionResult};
pub use tete::{tete_a_tetes, TeteATete};

pub const DEFAULT_DEGREE_BOUND: u32 = 4;
pub const DEFAULT_MAX_ITERATIONS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SagbiError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("seed generating set is empty")]
    EmptySeed,
    #[error("degree bound and iteration limit must be at least 1")]
    InvalidBound,
    #[error("line {line}: {message}")]
    File { line: usize, message: String },
}

/// Monic generators with distinct leading monomials.
#[derive(Clone, Debug)]
pub struct GeneratorSet<S> {
    order: TermOrder,
    gens: Vec<Polynomial<S>>,
    lms: Vec<Monomial>,
}

impl<S: Scalar> GeneratorSet<S> {
    pub fn empty(order: TermOrder) -> Self {
        GeneratorSet {
            order,
            gens: Vec::new(),
            lms: Vec::new(),
        }
    }

    /// Normalizes each seed to be monic. A seed whose leading monomial is
    /// already present is subducted against the generators collected so far
    /// and only its nonzero remainder is kept. Constants are dropped: they lie
    /// in every subalgebra.
    pub fn new<I>(order: TermOrder, seeds: I) -> Result<Self, SagbiError>
    where
        I: IntoIterator<Item = Polynomial<S>>,
    {
        let mut set = Self::empty(order);
        for f in seeds {
            set.insert(f)?;
        }
        Ok(set)
    }

    /// Adds `f`, merging a duplicate leading monomial as in [`Self::new`].
    /// Returns the index of the inserted generator, if any.
    pub fn insert(&mut self, f: Polynomial<S>) -> Result<Option<usize>, SagbiError> {
        if !self.order.compatible_with(f.vars()) {
            return Err(PolyError::MismatchedVariables.into());
        }
        if f.is_constant() {
            return Ok(None);
        }
        let lm = f.leading_monomial(&self.order)?;
        let f = if self.lms.contains(lm) {
            let r = subduct(&f, self).remainder;
            if r.is_constant() {
                return Ok(None);
            }
            r
        } else {
            f
        };
        Ok(Some(self.push_unchecked(f)))
    }

    /// Appends a nonconstant polynomial whose leading monomial is known to be
    /// new.
    pub(crate) fn push_unchecked(&mut self, f: Polynomial<S>) -> usize {
        let f = f.monic(&self.order).expect("order matches");
        let lm = f.leading_monomial(&self.order).expect("nonzero").clone();
        debug_assert!(!self.lms.contains(&lm));
        self.gens.push(f);
        self.lms.push(lm);
        self.gens.len() - 1
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        self.order.vars()
    }

    pub fn generators(&self) -> &[Polynomial<S>] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Product `Π g_i^{e_i}`.
    pub fn product(&self, exponents: &[u32]) -> Polynomial<S> {
        let mut p = Polynomial::one(self.vars());
        for (g, &e) in self.gens.iter().zip(exponents) {
            if e > 0 {
                p = &p * &g.pow(e);
            }
        }
        p
    }

    /// Generators free of every variable in `block`.
    ///
    /// With an elimination order whose leading block is `block`, this is the
    /// intersection of a subalgebra basis with the polynomial ring in the
    /// remaining variables.
    pub fn eliminate(&self, block: &[usize]) -> Vec<&Polynomial<S>> {
        self.gens
            .iter()
            .filter(|g| block.iter().all(|&b| !g.uses_variable(b)))
            .collect()
    }

    /// The generators free of the variables outside `target`, re-expressed
    /// over `target` with the induced order.
    pub fn restrict_to(&self, target: &Arc<VariableSet>) -> Result<Self, SagbiError> {
        let chain: Vec<&str> = self
            .order
            .priority()
            .iter()
            .map(|&i| self.vars().name(i))
            .filter(|n| target.contains(n))
            .collect();
        let order = TermOrder::lex_with(target, &chain)?;
        let dropped: Vec<usize> = (0..self.vars().len())
            .filter(|&i| !target.contains(self.vars().name(i)))
            .collect();
        let mut out = Self::empty(order);
        for g in self.eliminate(&dropped) {
            let h = g.embed(target)?;
            let lm = h.leading_monomial(&out.order)?.clone();
            if !out.lms.contains(&lm) {
                out.push_unchecked(h);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;
    use crate::Rational;

    #[test]
    fn generators_are_monic_and_deduplicated() {
        let vs = VariableSet::new(["x", "y"]).unwrap();
        let order = TermOrder::lex(&vs);
        let seeds = ["2*x + y", "x", "3", "y^2"]
            .iter()
            .map(|s| parse::<Rational>(s, &vs).unwrap());
        let set = GeneratorSet::new(order.clone(), seeds).unwrap();
        let shown: Vec<String> = set.generators().iter().map(|g| g.to_string()).collect();
        // `x` collides with `x + 1/2*y` and subducts to `-1/2*y`, kept as `y`.
        // Only exact leading-monomial collisions are merged, so `y^2` stays.
        assert_eq!(shown, ["x + 1/2*y", "y", "y^2"]);
    }
}
