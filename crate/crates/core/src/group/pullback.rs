use std::sync::Arc;

use super::{ActionKind, GroupError};
use crate::poly::{Polynomial, TermOrder, VariableSet};
use crate::sagbi::{GeneratorSet, SagbiError};
use crate::scalar::Scalar;

/// Images `ψ*(x_i)` of the space coordinates under the action map
/// `G × X → X`, over group variables followed by space variables.
#[derive(Clone, Debug)]
pub struct PullbackSystem<S> {
    pub group_vars: Vec<String>,
    pub space_vars: Arc<VariableSet>,
    pub images: Vec<Polynomial<S>>,
    /// Lex with the group block first, so it eliminates the group variables.
    pub order: TermOrder,
}

impl<S: Scalar> PullbackSystem<S> {
    pub fn vars(&self) -> &Arc<VariableSet> {
        self.order.vars()
    }

    pub fn generator_set(&self) -> Result<GeneratorSet<S>, SagbiError> {
        GeneratorSet::new(self.order.clone(), self.images.iter().cloned())
    }

    /// Indices of the group variables in [`Self::vars`].
    pub fn group_block(&self) -> Vec<usize> {
        (0..self.group_vars.len()).collect()
    }
}

/// Pullback of the translation action on `m` screws: `ω_i ↦ ω_i`,
/// `v_i ↦ t × ω_i + v_i`.
pub fn pullback<S: Scalar>(kind: ActionKind, m: usize) -> Result<PullbackSystem<S>, GroupError> {
    if kind != ActionKind::TranslationSub {
        return Err(GroupError::UnsupportedKind(kind));
    }
    let vars = VariableSet::translation_pullback(m);
    let space_vars = VariableSet::screws(m);
    let x = |i: usize| Polynomial::<S>::var(&vars, i);
    let t = [x(0), x(1), x(2)];
    let w = |i: usize, n: usize| x(3 + 3 * i + n);
    let v = |i: usize, n: usize| x(3 + 3 * m + 3 * i + n);
    let mut images = Vec::with_capacity(6 * m);
    for i in 0..m {
        for n in 0..3 {
            images.push(w(i, n));
        }
    }
    for i in 0..m {
        for n in 0..3 {
            let (a, b) = ((n + 1) % 3, (n + 2) % 3);
            images.push(&(&(&t[a] * &w(i, b)) - &(&t[b] * &w(i, a))) + &v(i, n));
        }
    }
    Ok(PullbackSystem {
        group_vars: vec!["t1".into(), "t2".into(), "t3".into()],
        space_vars,
        images,
        order: TermOrder::lex(&vars),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{format, parse};
    use crate::Rational;

    #[test]
    fn single_screw_images() {
        let p = pullback::<Rational>(ActionKind::TranslationSub, 1).unwrap();
        let shown: Vec<String> = p.images.iter().map(|f| format(f, &p.order)).collect();
        assert_eq!(
            shown,
            [
                "w11",
                "w12",
                "w13",
                "t2*w13 - t3*w12 + v11",
                "-t1*w13 + t3*w11 + v12",
                "t1*w12 - t2*w11 + v13"
            ]
        );
        assert!(p.order.is_elimination_order_for(&p.group_block()));
    }

    #[test]
    fn identity_section() {
        let p = pullback::<Rational>(ActionKind::TranslationSub, 2).unwrap();
        let vars = p.vars().clone();
        let zero = Polynomial::zero(&vars);
        let images: Vec<Option<Polynomial<Rational>>> = vars
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| {
                Some(if n.starts_with('t') {
                    zero.clone()
                } else {
                    Polynomial::var(&vars, i)
                })
            })
            .collect();
        for (img, name) in p.images.iter().zip(p.space_vars.names()) {
            let at_identity = img.substitute(&vars, &images).unwrap();
            assert_eq!(at_identity, parse(name, &vars).unwrap());
        }
        let chain: Vec<&str> = p.vars().names().iter().map(String::as_str).collect();
        assert_eq!(chain.first(), Some(&"t1"));
        assert_eq!(chain.last(), Some(&"v23"));
    }

    #[test]
    fn rotations_are_not_pulled_back() {
        assert_eq!(
            pullback::<Rational>(ActionKind::FullAdjoint, 1).unwrap_err(),
            GroupError::UnsupportedKind(ActionKind::FullAdjoint)
        );
    }
}
