use std::collections::HashMap;

use super::GeneratorSet;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// One step of a subduction: `coeff * Π g_i^{exponents[i]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateTerm<S> {
    pub coeff: S,
    pub exponents: Vec<u32>,
}

/// Formal expression of the subducted part of a polynomial in terms of the
/// generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate<S> {
    pub terms: Vec<CertificateTerm<S>>,
}

impl<S: Scalar> Certificate<S> {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self, basis: &GeneratorSet<S>) -> Polynomial<S> {
        self.terms.iter().fold(Polynomial::zero(basis.vars()), |acc, t| {
            acc + basis.product(&t.exponents).scale(&t.coeff)
        })
    }

    /// Human-readable form using `g1, g2, ...` for the generators.
    pub fn describe(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let factors: Vec<String> = t
                    .exponents
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| match e {
                        1 => format!("g{}", i + 1),
                        _ => format!("g{}^{e}", i + 1),
                    })
                    .collect();
                let body = if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                };
                format!("({})*{}", t.coeff, body)
            })
            .collect();
        parts.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubductionResult<S> {
    pub remainder: Polynomial<S>,
    pub certificate: Certificate<S>,
}

/// Repeatedly cancels the leading term of `f` by a scaled product of
/// generators whose leading monomials multiply to it.
///
/// Stops when the leading monomial of what is left is not such a product.
/// A zero remainder certifies membership in the generated subalgebra.
pub fn subduct<S: Scalar>(f: &Polynomial<S>, basis: &GeneratorSet<S>) -> SubductionResult<S> {
    let order = basis.order();
    let factorer = Factorer::new(basis.leading_monomials());
    let mut powers: HashMap<(usize, u32), Polynomial<S>> = HashMap::new();
    let mut rem = f.clone();
    let mut terms = Vec::new();
    let mut last: Option<Monomial> = None;
    while let Ok((lm, lc)) = rem.leading_term(order) {
        if let Some(prev) = &last {
            debug_assert!(order.cmp(lm, prev).is_lt(), "leading monomial must descend");
        }
        let Some(exps) = factorer.factor(lm) else { break };
        let coeff = lc.clone();
        last = Some(lm.clone());
        let mut product = Polynomial::constant(basis.vars(), coeff.clone());
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = powers.entry((i, e)).or_insert_with(|| basis.generators()[i].pow(e));
            product = &product * &*p;
        }
        rem = &rem - &product;
        terms.push(CertificateTerm { coeff, exponents: exps });
    }
    SubductionResult {
        remainder: rem,
        certificate: Certificate { terms },
    }
}

/// Decides whether a monomial is a product of the given leading monomials.
pub(crate) struct Factorer<'a> {
    lms: &'a [Monomial],
    // reachable[i][v]: some lm with index >= i uses variable v
    reachable: Vec<Vec<bool>>,
}

impl<'a> Factorer<'a> {
    pub(crate) fn new(lms: &'a [Monomial]) -> Self {
        let nvars = lms.first().map_or(0, Monomial::len);
        let mut reachable = vec![vec![false; nvars]; lms.len() + 1];
        for i in (0..lms.len()).rev() {
            let mut row = reachable[i + 1].clone();
            for (v, &e) in lms[i].exponents().iter().enumerate() {
                row[v] |= e > 0;
            }
            reachable[i] = row;
        }
        Factorer { lms, reachable }
    }

    /// Exponents `e` with `Π lms[i]^{e_i} = target`, preferring large
    /// powers of earlier generators.
    pub(crate) fn factor(&self, target: &Monomial) -> Option<Vec<u32>> {
        let mut exps = vec![0u32; self.lms.len()];
        self.search(0, target.clone(), &mut exps).then_some(exps)
    }

    fn search(&self, i: usize, rest: Monomial, exps: &mut [u32]) -> bool {
        if rest.is_one() {
            return true;
        }
        if i == self.lms.len() {
            return false;
        }
        let covered = rest
            .exponents()
            .iter()
            .zip(&self.reachable[i])
            .all(|(&e, &r)| e == 0 || r);
        if !covered {
            return false;
        }
        let lm = &self.lms[i];
        let max = lm
            .exponents()
            .iter()
            .zip(rest.exponents())
            .filter(|(&a, _)| a > 0)
            .map(|(&a, &b)| (b / a) as u32)
            .min()
            .unwrap_or(0);
        for k in (0..=max).rev() {
            let next = if k == 0 {
                rest.clone()
            } else {
                lm.pow(k).quotient_of(&rest).expect("divides")
            };
            exps[i] = k;
            if self.search(i + 1, next, exps) {
                return true;
            }
        }
        exps[i] = 0;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, TermOrder, VariableSet};
    use crate::Rational;

    fn set(vs: &std::sync::Arc<VariableSet>, gens: &[&str]) -> GeneratorSet<Rational> {
        GeneratorSet::new(
            TermOrder::lex(vs),
            gens.iter().map(|g| parse::<Rational>(g, vs).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn generator_subducts_to_itself() {
        let vs = VariableSet::screws(1);
        let basis = set(&vs, &["w11^2 + w12^2 + w13^2", "w11*v11 + w12*v12 + w13*v13"]);
        let res = subduct(&basis.generators()[1], &basis);
        assert!(res.remainder.is_zero());
        assert_eq!(res.certificate.terms.len(), 1);
        assert_eq!(res.certificate.terms[0].exponents, vec![0, 1]);
    }

    #[test]
    fn products_of_generators_are_members() {
        let vs = VariableSet::screws(1);
        let basis = set(&vs, &["w11^2 + w12^2 + w13^2", "w11*v11 + w12*v12 + w13*v13"]);
        let f = &basis.generators()[0] * &basis.generators()[1];
        let res = subduct(&f, &basis);
        assert!(res.remainder.is_zero());
        assert_eq!(res.certificate.evaluate(&basis), f);
    }

    #[test]
    fn soundness_on_nonmember() {
        let vs = VariableSet::screws(1);
        let basis = set(&vs, &["w11^2 + w12^2 + w13^2", "w11*v11 + w12*v12 + w13*v13"]);
        let f = parse::<Rational>("w11", &vs).unwrap();
        let res = subduct(&f, &basis);
        assert_eq!(res.remainder, f);
        assert!(res.certificate.is_empty());
        let g = parse::<Rational>("w11^2*v11 + 3*w12^3 + 5", &vs).unwrap();
        let res = subduct(&g, &basis);
        assert_eq!(&res.remainder + &res.certificate.evaluate(&basis), g);
    }

    #[test]
    fn zero_input() {
        let vs = VariableSet::new(["x"]).unwrap();
        let basis = set(&vs, &["x^2"]);
        let res = subduct(&Polynomial::zero(&vs), &basis);
        assert!(res.remainder.is_zero());
        assert!(res.certificate.is_empty());
    }

    #[test]
    fn factorer_backtracks() {
        let vs = VariableSet::new(["x", "y"]).unwrap();
        let lms: Vec<Monomial> = ["x^2", "x*y", "y"]
            .iter()
            .map(|s| parse::<Rational>(s, &vs).unwrap().terms().next().unwrap().0.clone())
            .collect();
        let f = Factorer::new(&lms);
        let target = parse::<Rational>("x^3*y^2", &vs).unwrap();
        let e = f.factor(target.terms().next().unwrap().0).unwrap();
        assert_eq!(e, vec![1, 1, 1]);
        let odd = parse::<Rational>("x", &vs).unwrap();
        assert!(f.factor(odd.terms().next().unwrap().0).is_none());
    }
}
