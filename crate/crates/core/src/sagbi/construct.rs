use std::collections::HashSet;

use rayon::prelude::*;

use super::{subduct, tete_a_tetes, Certificate, GeneratorSet, SagbiError, TeteATete};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct SagbiResult<S> {
    pub basis: GeneratorSet<S>,
    /// The last pass found every tête-à-tête within the bound subducting
    /// to zero.
    pub complete: bool,
    pub degree_bound: u32,
    pub iterations: usize,
}

/// Completes `seed` to a subalgebra basis up to a degree bound.
///
/// Each pass enumerates the tête-à-têtes of the current basis not handled in
/// an earlier pass, subducts them against a snapshot of the basis (in
/// parallel), then inserts the nonzero remainders one at a time in
/// increasing leading-monomial order, subducting each against the basis as
/// it grows. The loop stops once a pass adds nothing (`complete`) or after
/// `max_iterations` passes.
pub fn sagbi_construct<S: Scalar>(
    seed: GeneratorSet<S>,
    degree_bound: u32,
    max_iterations: usize,
) -> Result<SagbiResult<S>, SagbiError> {
    if seed.is_empty() {
        return Err(SagbiError::EmptySeed);
    }
    if degree_bound == 0 || max_iterations == 0 {
        return Err(SagbiError::InvalidBound);
    }
    let mut basis = seed;
    let mut processed: HashSet<TeteATete> = HashSet::new();
    let mut complete = false;
    let mut iterations = 0;
    while iterations < max_iterations {
        iterations += 1;
        let pending: Vec<TeteATete> = tete_a_tetes(&basis, degree_bound)
            .into_iter()
            .filter(|t| !processed.contains(t))
            .collect();
        let snapshot = &basis;
        let mut remainders: Vec<Polynomial<S>> = pending
            .par_iter()
            .map(|t| subduct(&t.polynomial(snapshot), snapshot).remainder)
            .filter(|r| !r.is_zero())
            .collect();
        processed.extend(pending);

        let order = basis.order().clone();
        remainders.sort_by(|a, b| {
            let la = a.leading_monomial(&order).expect("nonzero");
            let lb = b.leading_monomial(&order).expect("nonzero");
            order.cmp(la, lb)
        });
        let mut added = 0;
        for r in remainders {
            let r = subduct(&r, &basis).remainder;
            if !r.is_constant() {
                basis.push_unchecked(r);
                added += 1;
            }
        }
        if added == 0 {
            complete = true;
            break;
        }
    }
    Ok(SagbiResult {
        basis,
        complete,
        degree_bound,
        iterations,
    })
}

/// Outcome of a membership query.
#[derive(Clone, Debug)]
pub struct Membership<S> {
    pub member: bool,
    /// False when the answer is "not provably a member below the bound"
    /// because the basis was not completed.
    pub definitive: bool,
    pub remainder: Polynomial<S>,
    pub certificate: Certificate<S>,
}

pub fn is_member<S: Scalar>(f: &Polynomial<S>, result: &SagbiResult<S>) -> Membership<S> {
    let res = subduct(f, &result.basis);
    let member = res.remainder.is_zero();
    Membership {
        member,
        definitive: member || result.complete,
        remainder: res.remainder,
        certificate: res.certificate,
    }
}

/// Partial check of the basis property: every witness, assumed to lie in
/// the subalgebra, must subduct to zero.
pub fn verify_sagbi<S: Scalar>(basis: &GeneratorSet<S>, witnesses: &[Polynomial<S>]) -> bool {
    witnesses.par_iter().all(|w| subduct(w, basis).remainder.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, TermOrder, VariableSet};
    use crate::Rational;

    fn set(vars: &[&str], gens: &[&str]) -> GeneratorSet<Rational> {
        let vs = VariableSet::new(vars.iter().copied()).unwrap();
        GeneratorSet::new(
            TermOrder::lex(&vs),
            gens.iter().map(|g| parse::<Rational>(g, &vs).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn free_seed_is_complete_immediately() {
        let r = sagbi_construct(set(&["x", "y"], &["x", "y"]), 4, 16).unwrap();
        assert!(r.complete);
        assert_eq!(r.iterations, 1);
        assert_eq!(r.basis.len(), 2);
    }

    #[test]
    fn classic_infinite_example_hits_the_bound() {
        // K[x + y, xy, xy^2] has no finite basis under lex x > y.
        let r = sagbi_construct(set(&["x", "y"], &["x + y", "x*y", "x*y^2"]), 12, 3).unwrap();
        assert!(!r.complete);
        assert_eq!(r.iterations, 3);
        assert!(r.basis.len() > 3);
    }

    #[test]
    fn symmetric_polynomials_are_already_a_basis() {
        let r = sagbi_construct(set(&["x", "y"], &["x + y", "x*y"]), 6, 4).unwrap();
        assert!(r.complete);
        assert_eq!(r.basis.len(), 2);
        let f = parse::<Rational>("x^3 + y^3", r.basis.vars()).unwrap();
        let m = is_member(&f, &r);
        assert!(m.member && m.definitive);
        assert_eq!(m.certificate.evaluate(&r.basis), f);
        let g = parse::<Rational>("x", r.basis.vars()).unwrap();
        let m = is_member(&g, &r);
        assert!(!m.member && m.definitive);
    }

    #[test]
    fn bad_arguments() {
        let vs = VariableSet::new(["x"]).unwrap();
        let empty = GeneratorSet::<Rational>::empty(TermOrder::lex(&vs));
        assert_eq!(sagbi_construct(empty, 4, 4).unwrap_err(), SagbiError::EmptySeed);
        let s = set(&["x"], &["x"]);
        assert_eq!(sagbi_construct(s, 0, 4).unwrap_err(), SagbiError::InvalidBound);
    }

    #[test]
    fn witnesses() {
        let basis = set(&["x", "y"], &["x + y"]);
        let w = parse::<Rational>("x^2 + 2*x*y + y^2", basis.vars()).unwrap();
        assert!(verify_sagbi(&basis, &[w]));
        let bad = parse::<Rational>("x*y", basis.vars()).unwrap();
        assert!(!verify_sagbi(&basis, &[bad]));
    }
}
