use std::array;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::element::{mat_vec, skew};
use super::layout::Layout;
use super::{ActionKind, GroupError, Quaternion, QuaternionElement};
use crate::poly::{Polynomial, VariableSet};
use crate::scalar::Scalar;

pub const DEFAULT_SAMPLES: usize = 32;
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Exact test of `f(g·x) = f(x)` with the group element kept symbolic.
///
/// Translations substitute `v_i ↦ t × ω_i + v_i` with free `t1, t2, t3`.
/// Rotations use the quaternion matrix `R̃(q)` with free `q0..q3`; since
/// `R = R̃/N` with `N = |q|²`, every image is a polynomial over `N`, so each
/// homogeneous part `f_k` is compared after multiplying through by `N^d`:
/// `Σ f_k(R̃-images) N^(d-k) = f N^d`.
pub fn check_invariant_symbolic<S: Scalar>(f: &Polynomial<S>, kind: ActionKind) -> Result<bool, GroupError> {
    let layout = Layout::of(f.vars())?;
    let space = f.vars();
    let mut names: Vec<String> = Vec::new();
    if kind.rotates() {
        names.extend(["q0", "q1", "q2", "q3"].map(String::from));
    }
    if kind.translates() {
        names.extend(["t1", "t2", "t3"].map(String::from));
    }
    let group_len = names.len();
    names.extend(space.names().iter().cloned());
    let target = VariableSet::new(names).map_err(GroupError::Poly)?;
    let var = |i: usize| Polynomial::<S>::var(&target, i);
    let space_var = |i: usize| var(group_len + i);

    let rot: [[Polynomial<S>; 3]; 3] = if kind.rotates() {
        let q = Quaternion([var(0), var(1), var(2), var(3)]);
        symbolic_rotation(&q)
    } else {
        array::from_fn(|i| {
            array::from_fn(|j| {
                if i == j {
                    Polynomial::one(&target)
                } else {
                    Polynomial::zero(&target)
                }
            })
        })
    };
    let rotate = |idx: &[usize; 3]| -> [Polynomial<S>; 3] {
        array::from_fn(|i| {
            (0..3).fold(Polynomial::zero(&target), |acc, j| {
                if rot[i][j].is_zero() {
                    acc
                } else {
                    &acc + &(&rot[i][j] * &space_var(idx[j]))
                }
            })
        })
    };
    let t_off = if kind.rotates() { 4 } else { 0 };

    let mut images: Vec<Option<Polynomial<S>>> = vec![None; space.len()];
    for v in &layout.vectors {
        for (n, img) in rotate(v).into_iter().enumerate() {
            images[v[n]] = Some(img);
        }
    }
    for s in &layout.screws {
        let rw = rotate(&s.omega);
        if let Some(vee) = &s.vee {
            let mut rv = rotate(vee);
            if kind.translates() {
                let t = [var(t_off), var(t_off + 1), var(t_off + 2)];
                for (n, x) in rv.iter_mut().enumerate() {
                    let (a, b) = ((n + 1) % 3, (n + 2) % 3);
                    *x = &*x + &(&(&t[a] * &rw[b]) - &(&t[b] * &rw[a]));
                }
            }
            for (n, img) in rv.into_iter().enumerate() {
                images[vee[n]] = Some(img);
            }
        }
        for (n, img) in rw.into_iter().enumerate() {
            images[s.omega[n]] = Some(img);
        }
    }

    let lifted = f.embed(&target)?;
    if !kind.rotates() {
        return Ok(f.substitute(&target, &images)? == lifted);
    }
    let norm = (0..4).fold(Polynomial::zero(&target), |acc, i| &acc + &var(i).pow(2));
    let parts = homogeneous_parts(f);
    let d = parts.len() as u32 - 1;
    let mut lhs = Polynomial::zero(&target);
    for (k, part) in parts.iter().enumerate() {
        if part.is_zero() {
            continue;
        }
        let moved = part.substitute(&target, &images)?;
        lhs = &lhs + &(&moved * &norm.pow(d - k as u32));
    }
    Ok(lhs == &lifted * &norm.pow(d))
}

fn symbolic_rotation<S: Scalar>(q: &Quaternion<Polynomial<S>>) -> [[Polynomial<S>; 3]; 3] {
    let [a, b, c, d] = &q.0;
    let two = |p: Polynomial<S>| p.scale(&S::from_i64(2));
    [
        [
            &(&(&(a * a) + &(b * b)) - &(c * c)) - &(d * d),
            two(&(b * c) - &(a * d)),
            two(&(b * d) + &(a * c)),
        ],
        [
            two(&(b * c) + &(a * d)),
            &(&(&(a * a) - &(b * b)) + &(c * c)) - &(d * d),
            two(&(c * d) - &(a * b)),
        ],
        [
            two(&(b * d) - &(a * c)),
            two(&(c * d) + &(a * b)),
            &(&(&(a * a) - &(b * b)) - &(c * c)) + &(d * d),
        ],
    ]
}

/// `parts[k]` is the degree-`k` component.
fn homogeneous_parts<S: Scalar>(f: &Polynomial<S>) -> Vec<Polynomial<S>> {
    let d = f.total_degree().unwrap_or(0) as usize;
    let mut buckets: Vec<Vec<_>> = vec![Vec::new(); d + 1];
    for (m, c) in f.terms() {
        buckets[m.degree() as usize].push((m.clone(), c.clone()));
    }
    buckets
        .into_iter()
        .map(|terms| Polynomial::from_terms(f.vars(), terms))
        .collect()
}

/// A sampled group element and point where `f` is not fixed.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample<S> {
    pub sample: usize,
    pub element: QuaternionElement<S>,
    /// Values in the order of `f`'s variable set.
    pub point: Vec<S>,
    pub before: S,
    pub after: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleReport<S> {
    pub samples: usize,
    pub seed: u64,
    pub counterexample: Option<Counterexample<S>>,
}

impl<S> SampleReport<S> {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// A random element of the chosen group: integer quaternion in
/// `[-100, 100]⁴ \ {0}`, integer translation in `[-1000, 1000]³`.
pub fn random_element<S: Scalar, R: Rng>(kind: ActionKind, rng: &mut R) -> QuaternionElement<S> {
    let quaternion = if kind.rotates() {
        loop {
            let q: [i64; 4] = array::from_fn(|_| rng.gen_range(-100..=100));
            if let Ok(q) = Quaternion::from_ints(q) {
                break q;
            }
        }
    } else {
        Quaternion::from_ints([1, 0, 0, 0]).expect("nonzero")
    };
    let translation = if kind.translates() {
        array::from_fn(|_| S::from_i64(rng.gen_range(-1000..=1000)))
    } else {
        array::from_fn(|_| S::zero())
    };
    QuaternionElement {
        quaternion,
        translation,
    }
}

fn random_rational<S: Scalar, R: Rng>(rng: &mut R) -> S {
    S::from_frac(rng.gen_range(-1000..=1000), rng.gen_range(1..=100))
}

/// Probabilistic test of `f(g·x) = f(x)` at `samples` random exact group
/// elements and points. Sample `i` draws from its own stream of `seed`, so
/// the outcome does not depend on scheduling; the first failing sample is
/// reported.
pub fn check_invariant_sampled<S: Scalar>(
    f: &Polynomial<S>,
    kind: ActionKind,
    samples: usize,
    seed: u64,
) -> Result<SampleReport<S>, GroupError> {
    if samples == 0 {
        return Err(GroupError::NoSamples);
    }
    let layout = Layout::of(f.vars())?;
    let vars: &Arc<VariableSet> = f.vars();
    let counterexample = (0..samples)
        .into_par_iter()
        .map(|i| -> Result<Option<Counterexample<S>>, GroupError> {
            let mut rng = rng_for(seed, i);
            let element = random_element::<S, _>(kind, &mut rng);
            let point: Vec<S> = (0..vars.len()).map(|_| random_rational(&mut rng)).collect();
            let moved = act(&layout, &element, &point);
            let before = f.evaluate(&point)?;
            let after = f.evaluate(&moved)?;
            Ok((before != after).then(|| Counterexample {
                sample: i,
                element,
                point,
                before,
                after,
            }))
        })
        .find_first(|r| !matches!(r, Ok(None)))
        .transpose()?
        .flatten();
    Ok(SampleReport {
        samples,
        seed,
        counterexample,
    })
}

fn act<S: Scalar>(layout: &Layout, element: &QuaternionElement<S>, point: &[S]) -> Vec<S> {
    let g = element.element();
    let r = g.rotation.matrix();
    let pick = |idx: &[usize; 3]| -> [S; 3] { array::from_fn(|n| point[idx[n]].clone()) };
    let mut out = point.to_vec();
    for v in &layout.vectors {
        for (n, x) in mat_vec(r, &pick(v)).into_iter().enumerate() {
            out[v[n]] = x;
        }
    }
    let t = skew(&g.translation);
    for s in &layout.screws {
        let rw = mat_vec(r, &pick(&s.omega));
        if let Some(vee) = &s.vee {
            let rv = mat_vec(r, &pick(vee));
            let trw = mat_vec(&t, &rw);
            for n in 0..3 {
                out[vee[n]] = trw[n].clone() + rv[n].clone();
            }
        }
        for (n, x) in rw.into_iter().enumerate() {
            out[s.omega[n]] = x;
        }
    }
    out
}
