use std::collections::{HashMap, HashSet};

use super::GeneratorSet;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// A pair of generator power products with equal leading monomials.
///
/// `a` and `b` are exponent vectors over the generator list (trailing zeros
/// trimmed) with disjoint supports.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TeteATete {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl TeteATete {
    /// `Π g^a - Π g^b`; the leading terms cancel because generators are
    /// monic.
    pub fn polynomial<S: Scalar>(&self, basis: &GeneratorSet<S>) -> Polynomial<S> {
        &basis.product(&self.a) - &basis.product(&self.b)
    }

    /// Total degree of the common leading monomial.
    pub fn degree<S: Scalar>(&self, basis: &GeneratorSet<S>) -> u32 {
        lm_degree(&self.a, basis.leading_monomials())
    }
}

fn lm_degree(e: &[u32], lms: &[Monomial]) -> u32 {
    e.iter().zip(lms).map(|(&k, m)| k * m.degree()).sum()
}

type Sparse = Vec<(usize, u32)>;

fn dense(s: &Sparse) -> Vec<u32> {
    let len = s.last().map_or(0, |&(i, _)| i + 1);
    let mut v = vec![0; len];
    for &(i, k) in s {
        v[i] = k;
    }
    v
}

/// All minimal tête-à-têtes whose common leading monomial has total degree at
/// most `degree_bound`.
///
/// Enumerates every power product of leading monomials up to the bound,
/// groups them by product, and keeps the disjoint-support pairs that do not
/// contain a smaller relation (a sub-pair with equal products).
pub fn tete_a_tetes<S: Scalar>(basis: &GeneratorSet<S>, degree_bound: u32) -> Vec<TeteATete> {
    let lms = basis.leading_monomials();
    let nvars = basis.vars().len();
    let mut groups: HashMap<Monomial, Vec<Sparse>> = HashMap::new();
    let mut stack: Sparse = Vec::new();
    enumerate(lms, 0, degree_bound, Monomial::one(nvars), &mut stack, &mut groups);

    let mut out = Vec::new();
    let order = basis.order();
    let mut keys: Vec<&Monomial> = groups.keys().filter(|k| groups[*k].len() > 1).collect();
    keys.sort_by(|a, b| order.cmp(a, b));
    for key in keys {
        let mut members = groups[key].clone();
        members.sort_by_key(|s| std::cmp::Reverse(dense(s)));
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let (a, b) = (&members[i], &members[j]);
                if a.iter().any(|(ia, _)| b.iter().any(|(ib, _)| ia == ib)) {
                    continue;
                }
                if is_minimal(a, b, lms) {
                    out.push(TeteATete {
                        a: dense(a),
                        b: dense(b),
                    });
                }
            }
        }
    }
    out
}

fn enumerate(
    lms: &[Monomial],
    start: usize,
    budget: u32,
    current: Monomial,
    stack: &mut Sparse,
    groups: &mut HashMap<Monomial, Vec<Sparse>>,
) {
    if !stack.is_empty() {
        groups.entry(current.clone()).or_default().push(stack.clone());
    }
    for i in start..lms.len() {
        let d = lms[i].degree();
        if d == 0 || d > budget {
            continue;
        }
        let mut m = current.clone();
        let mut k = 0;
        let mut left = budget;
        while d <= left {
            m = m.mul(&lms[i]);
            k += 1;
            left -= d;
            stack.push((i, k));
            enumerate(lms, i + 1, left, m.clone(), stack, groups);
            stack.pop();
        }
    }
}

/// (product, is_whole) for every nonempty sub-multiset of `s`.
fn sub_products(s: &Sparse, lms: &[Monomial]) -> Vec<(Monomial, bool)> {
    let nvars = lms.first().map_or(0, Monomial::len);
    let full: u32 = s.iter().map(|&(_, k)| k).sum();
    let mut out = vec![(Monomial::one(nvars), 0u32)];
    for &(i, k) in s {
        let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
        for (m, size) in &out {
            let mut mm = m.clone();
            next.push((mm.clone(), *size));
            for j in 1..=k {
                mm = mm.mul(&lms[i]);
                next.push((mm.clone(), size + j));
            }
        }
        out = next;
    }
    out.into_iter()
        .filter(|(_, size)| *size > 0)
        .map(|(m, size)| (m, size == full))
        .collect()
}

fn is_minimal(a: &Sparse, b: &Sparse, lms: &[Monomial]) -> bool {
    let proper_b: HashSet<Monomial> = sub_products(b, lms)
        .into_iter()
        .filter(|(_, full)| !full)
        .map(|(m, _)| m)
        .collect();
    sub_products(a, lms)
        .into_iter()
        .filter(|(_, full)| !full)
        .all(|(m, _)| !proper_b.contains(&m))
}
