use std::cmp::Ordering;
use std::sync::Arc;

use super::{varset::same_vars, Monomial, PolyError, VariableSet};

/// Pure lexicographic term order with an explicit variable priority.
///
/// Any prefix of the priority list is an elimination block: a monomial
/// involving one of those variables exceeds every monomial free of them.
#[derive(Clone, Debug)]
pub struct TermOrder {
    vars: Arc<VariableSet>,
    priority: Arc<[usize]>,
    natural: bool,
}

impl TermOrder {
    /// Lex order following the variable set's own order.
    pub fn lex(vars: &Arc<VariableSet>) -> Self {
        TermOrder {
            vars: vars.clone(),
            priority: (0..vars.len()).collect(),
            natural: true,
        }
    }

    /// Lex order with the given highest-to-lowest variable chain, which must
    /// be a permutation of `vars`.
    pub fn lex_with<T: AsRef<str>>(vars: &Arc<VariableSet>, chain: &[T]) -> Result<Self, PolyError> {
        if chain.len() != vars.len() {
            return Err(PolyError::InvalidOrder(format!(
                "order lists {} variables, variable set has {}",
                chain.len(),
                vars.len()
            )));
        }
        let mut seen = vec![false; vars.len()];
        let mut priority = Vec::with_capacity(chain.len());
        for name in chain {
            let name = name.as_ref();
            let idx = vars
                .index_of(name)
                .ok_or_else(|| PolyError::InvalidOrder(format!("unknown variable `{name}`")))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(PolyError::InvalidOrder(format!("variable `{name}` repeated")));
            }
            priority.push(idx);
        }
        let natural = priority.iter().enumerate().all(|(i, &p)| i == p);
        Ok(TermOrder {
            vars: vars.clone(),
            priority: priority.into(),
            natural,
        })
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    /// Variable indices from highest to lowest priority.
    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.natural {
            return a.cmp(b);
        }
        let (ea, eb) = (a.exponents(), b.exponents());
        for &p in self.priority.iter() {
            match ea[p].cmp(&eb[p]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// True when `block` is exactly the set of the first `block.len()`
    /// variables in priority order.
    pub fn is_elimination_order_for(&self, block: &[usize]) -> bool {
        let head = &self.priority[..block.len().min(self.priority.len())];
        head.len() == block.len() && block.iter().all(|b| head.contains(b))
    }

    pub(crate) fn compatible_with(&self, vars: &Arc<VariableSet>) -> bool {
        same_vars(&self.vars, vars)
    }
}

impl PartialEq for TermOrder {
    fn eq(&self, other: &Self) -> bool {
        same_vars(&self.vars, &other.vars) && self.priority == other.priority
    }
}

impl Eq for TermOrder {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn custom_chain_reorders_comparison() {
        let vs = VariableSet::new(["x", "y"]).unwrap();
        let x = Monomial::var(2, 0);
        let y = Monomial::var(2, 1);
        assert_eq!(TermOrder::lex(&vs).cmp(&x, &y), Ordering::Greater);
        let yx = TermOrder::lex_with(&vs, &["y", "x"]).unwrap();
        assert_eq!(yx.cmp(&x, &y), Ordering::Less);
        assert!(yx.is_elimination_order_for(&[1]));
        assert!(!yx.is_elimination_order_for(&[0]));
    }

    #[test]
    fn invalid_chains() {
        let vs = VariableSet::new(["x", "y"]).unwrap();
        assert!(TermOrder::lex_with(&vs, &["x"]).is_err());
        assert!(TermOrder::lex_with(&vs, &["x", "x"]).is_err());
        assert!(TermOrder::lex_with(&vs, &["x", "z"]).is_err());
    }
}
