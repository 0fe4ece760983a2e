use std::sync::Arc;

use super::ScrewError;
use crate::poly::{self, Polynomial, TermOrder, VariableSet};
use crate::sagbi::{format_basis_file, subduct, GeneratorSet};
use crate::scalar::Scalar;

type Vec3<S> = [Polynomial<S>; 3];

/// Named invariant polynomials over one variable set.
#[derive(Clone, Debug)]
pub struct Catalog<S> {
    pub title: String,
    pub order: TermOrder,
    pub entries: Vec<(String, Polynomial<S>)>,
    /// Generation is conjectured, not proven.
    pub conjectural: bool,
    pub completeness: Completeness,
}

/// Whether a list is known to be a complete subalgebra basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// A generating list, not claimed to be a subalgebra basis.
    NotClaimed,
    Complete,
    Unknown,
}

impl<S: Scalar> Catalog<S> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        self.order.vars()
    }

    pub fn polys(&self) -> Vec<Polynomial<S>> {
        self.entries.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Polynomial<S>> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    /// Basis-file text with a `# name` comment before each polynomial.
    /// Rank of the Jacobian of the entries at `point`. At a generic point
    /// this is the transcendence degree of the generated subalgebra.
    pub fn jacobian_rank(&self, point: &[S]) -> Result<usize, ScrewError> {
        let n = self.vars().len();
        if point.len() != n {
            return Err(ScrewError::LengthMismatch(point.len(), n));
        }
        let rows = self
            .entries
            .iter()
            .map(|(_, f)| {
                (0..n)
                    .map(|i| f.derivative(i).evaluate(point))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .expect("point length checked");
        Ok(rank(rows))
    }

    pub fn dump(&self) -> String {
        let mut out = format!("# {}\n", self.title);
        if self.conjectural {
            out.push_str("# conjectural: true\n");
        }
        match self.completeness {
            Completeness::NotClaimed => {}
            Completeness::Complete => out.push_str("# complete: true\n"),
            Completeness::Unknown => out.push_str("# complete: unknown\n"),
        }
        out + &format_basis_file(&self.order, &self.polys(), Some(&self.names()), &[])
    }
}

/// Variables of a fixed set, grouped as 3-vectors.
struct Coords<S> {
    vars: Arc<VariableSet>,
    _s: std::marker::PhantomData<S>,
}

impl<S: Scalar> Coords<S> {
    fn new(vars: Arc<VariableSet>) -> Self {
        Coords {
            vars,
            _s: std::marker::PhantomData,
        }
    }

    fn vector(&self, prefix: char, i: usize) -> Vec3<S> {
        [1, 2, 3].map(|n| Polynomial::var_named(&self.vars, &format!("{prefix}{i}{n}")).expect("canonical name"))
    }
}

fn dot<S: Scalar>(a: &Vec3<S>, b: &Vec3<S>) -> Polynomial<S> {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

/// Determinant by the Leibniz expansion.
pub(crate) fn determinant<S: Scalar>(rows: &[Vec<Polynomial<S>>], vars: &Arc<VariableSet>) -> Polynomial<S> {
    let k = rows.len();
    let mut total = Polynomial::zero(vars);
    let mut perm: Vec<usize> = (0..k).collect();
    permutations(&mut perm, 0, &mut |p, sign| {
        let mut term = Polynomial::constant(vars, S::from_i64(sign));
        for (r, &c) in p.iter().enumerate() {
            if rows[r][c].is_zero() {
                return;
            }
            term = &term * &rows[r][c];
        }
        total = &total + &term;
    });
    total
}

fn permutations(p: &mut Vec<usize>, start: usize, visit: &mut dyn FnMut(&[usize], i64)) {
    fn go(p: &mut Vec<usize>, start: usize, sign: i64, visit: &mut dyn FnMut(&[usize], i64)) {
        if start == p.len() {
            visit(p, sign);
            return;
        }
        for i in start..p.len() {
            p.swap(start, i);
            go(p, start + 1, if i == start { sign } else { -sign }, visit);
            p.swap(start, i);
        }
    }
    go(p, start, 1, visit);
}

fn bracket<S: Scalar>(a: &Vec3<S>, b: &Vec3<S>, c: &Vec3<S>, vars: &Arc<VariableSet>) -> Polynomial<S> {
    determinant(&[a.to_vec(), b.to_vec(), c.to_vec()], vars)
}

pub fn count(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn check_index(i: usize, m: usize) -> Result<(), ScrewError> {
    if i == 0 || i > m {
        return Err(ScrewError::IndexOutOfRange { index: i, m });
    }
    Ok(())
}

/// Dot products `x_i·x_j` (`i ≤ j`) and, for `m ≥ 3`, brackets
/// `[x_i, x_j, x_k]` (`i < j < k`) of `m` vectors.
pub fn so3_vector_invariants<S: Scalar>(m: usize) -> Result<Catalog<S>, ScrewError> {
    if m == 0 {
        return Err(ScrewError::UnsupportedCount(m));
    }
    let vars = VariableSet::vectors(m);
    let c = Coords::<S>::new(vars.clone());
    let x: Vec<Vec3<S>> = (1..=m).map(|i| c.vector('x', i)).collect();
    let mut entries = Vec::new();
    for i in 0..m {
        for j in i..m {
            entries.push((format!("dot_{}{}", i + 1, j + 1), dot(&x[i], &x[j])));
        }
    }
    entries.extend(brackets(&x, &vars, "bracket"));
    Ok(Catalog {
        title: format!("SO(3) vector invariants, {}", count(m, "vector")),
        order: TermOrder::lex(&vars),
        entries,
        conjectural: false,
        completeness: Completeness::NotClaimed,
    })
}

fn brackets<S: Scalar>(x: &[Vec3<S>], vars: &Arc<VariableSet>, label: &str) -> Vec<(String, Polynomial<S>)> {
    let m = x.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                out.push((
                    format!("{label}_{}{}{}", i + 1, j + 1, k + 1),
                    bracket(&x[i], &x[j], &x[k], vars),
                ));
            }
        }
    }
    out
}

/// The Gram minor `f^{rows}_{cols}`: determinant of the matrix of dot
/// products `x_r·x_c`, expanded over the `m`-vector variable set.
pub fn gram_minor<S: Scalar>(m: usize, rows: &[usize], cols: &[usize]) -> Result<Polynomial<S>, ScrewError> {
    if rows.len() != cols.len() {
        return Err(ScrewError::LengthMismatch(rows.len(), cols.len()));
    }
    for &i in rows.iter().chain(cols) {
        check_index(i, m)?;
    }
    let vars = VariableSet::vectors(m);
    let c = Coords::<S>::new(vars.clone());
    let matrix: Vec<Vec<Polynomial<S>>> = rows
        .iter()
        .map(|&r| {
            cols.iter()
                .map(|&k| dot(&c.vector('x', r), &c.vector('x', k)))
                .collect()
        })
        .collect();
    Ok(determinant(&matrix, &vars))
}

/// All `1×1` and `2×2` Gram minors and all brackets of `m` vectors, under
/// lex `x11 > x12 > … > xm3`.
///
/// The Gram matrix is symmetric, so `f^I_J = f^J_I`; only `I ≤ J` is listed.
/// Minors with a repeated row or column index vanish and are skipped.
pub fn so3_sagbi_catalog<S: Scalar>(m: usize) -> Result<Catalog<S>, ScrewError> {
    if m == 0 {
        return Err(ScrewError::UnsupportedCount(m));
    }
    let vars = VariableSet::vectors(m);
    let c = Coords::<S>::new(vars.clone());
    let x: Vec<Vec3<S>> = (1..=m).map(|i| c.vector('x', i)).collect();
    let mut entries = Vec::new();
    for i in 0..m {
        for j in i..m {
            entries.push((format!("dot_{}{}", i + 1, j + 1), dot(&x[i], &x[j])));
        }
    }
    let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|a| (a + 1..=m).map(move |b| (a, b))).collect();
    for (n, &(i1, i2)) in pairs.iter().enumerate() {
        for &(j1, j2) in &pairs[n..] {
            entries.push((format!("minor_{i1}{i2}_{j1}{j2}"), gram_minor(m, &[i1, i2], &[j1, j2])?));
        }
    }
    entries.extend(brackets(&x, &vars, "bracket"));
    Ok(Catalog {
        title: format!("SO(3) subalgebra basis, {}", count(m, "vector")),
        order: TermOrder::lex(&vars),
        entries,
        conjectural: false,
        completeness: Completeness::Complete,
    })
}

/// Generators of the SE(3) invariants of `m ≤ 3` screws. The three-screw
/// list is a conjecture.
pub fn se3_generator_catalog<S: Scalar>(m: usize) -> Result<Catalog<S>, ScrewError> {
    if !(1..=3).contains(&m) {
        return Err(ScrewError::UnsupportedCount(m));
    }
    let vars = VariableSet::screws(m);
    let c = Coords::<S>::new(vars.clone());
    let w: Vec<Vec3<S>> = (1..=m).map(|i| c.vector('w', i)).collect();
    let v: Vec<Vec3<S>> = (1..=m).map(|i| c.vector('v', i)).collect();
    let mut entries = Vec::new();
    for i in 0..m {
        entries.push((format!("killing_{}", i + 1), dot(&w[i], &w[i])));
        for j in i + 1..m {
            entries.push((format!("dot_{}{}", i + 1, j + 1), dot(&w[i], &w[j])));
        }
    }
    entries.extend(kleins(&w, &v));
    if m == 3 {
        entries.push(("bracket_w".into(), bracket(&w[0], &w[1], &w[2], &vars)));
        let sum = &(&bracket(&v[0], &w[1], &w[2], &vars) + &bracket(&w[0], &v[1], &w[2], &vars))
            + &bracket(&w[0], &w[1], &v[2], &vars);
        entries.push(("bracket_sum".into(), sum));
    }
    Ok(Catalog {
        title: format!("SE(3) invariant generators, {}", count(m, "screw")),
        order: TermOrder::lex(&vars),
        entries,
        conjectural: m == 3,
        completeness: Completeness::NotClaimed,
    })
}

/// `ω_i·v_i` and the mixed sums `ω_i·v_j + ω_j·v_i`.
fn kleins<S: Scalar>(w: &[Vec3<S>], v: &[Vec3<S>]) -> Vec<(String, Polynomial<S>)> {
    let m = w.len();
    let mut out: Vec<_> = (0..m)
        .map(|i| (format!("klein_{}", i + 1), dot(&w[i], &v[i])))
        .collect();
    for i in 0..m {
        for j in i + 1..m {
            out.push((
                format!("klein_{}{}", i + 1, j + 1),
                &dot(&w[i], &v[j]) + &dot(&w[j], &v[i]),
            ));
        }
    }
    out
}

/// `z_ijk` over three screws: the determinant whose rows are component `i`
/// of `ω_1, ω_2, ω_3`, component `j` of the same, and component `k` of
/// `v_1, v_2, v_3`. Columns are indexed by screw.
pub fn z_poly<S: Scalar>(i: usize, j: usize, k: usize) -> Result<Polynomial<S>, ScrewError> {
    for &a in &[i, j, k] {
        check_index(a, 3)?;
    }
    let vars = VariableSet::screws(3);
    let c = Coords::<S>::new(vars.clone());
    let column = |prefix: char, comp: usize| -> Vec<Polynomial<S>> {
        (1..=3).map(|screw| c.vector(prefix, screw)[comp - 1].clone()).collect()
    };
    Ok(determinant(&[column('w', i), column('w', j), column('v', k)], &vars))
}

/// Generators of the translation invariants of `m ≤ 3` screws.
///
/// For two screws the cubic is the subduction remainder of the tête-à-tête
/// `ω11 (ω2·v2) − ω21 (ω1·v2 + ω2·v1)` against the preceding nine. The
/// three-screw list is not known to be complete.
pub fn translation_sagbi_catalog<S: Scalar>(m: usize) -> Result<Catalog<S>, ScrewError> {
    if !(1..=3).contains(&m) {
        return Err(ScrewError::UnsupportedCount(m));
    }
    let vars = VariableSet::screws(m);
    let order = TermOrder::lex(&vars);
    let c = Coords::<S>::new(vars.clone());
    let w: Vec<Vec3<S>> = (1..=m).map(|i| c.vector('w', i)).collect();
    let v: Vec<Vec3<S>> = (1..=m).map(|i| c.vector('v', i)).collect();
    let mut entries: Vec<(String, Polynomial<S>)> = Vec::new();
    for (i, wi) in w.iter().enumerate() {
        for (n, coord) in wi.iter().enumerate() {
            entries.push((format!("w{}{}", i + 1, n + 1), coord.clone()));
        }
    }
    entries.extend(kleins(&w, &v));
    if m == 2 {
        let klein = |name: &str| entries.iter().find(|(n, _)| n == name).expect("listed").1.clone();
        let tete = &(&w[0][0] * &klein("klein_2")) - &(&w[1][0] * &klein("klein_12"));
        let basis =
            GeneratorSet::new(order.clone(), entries.iter().map(|(_, p)| p.clone())).expect("nonconstant generators");
        let cubic = subduct(&tete, &basis).remainder;
        entries.push(("cubic".into(), cubic));
    }
    if m == 3 {
        let z = |i, j, k| z_poly::<S>(i, j, k).expect("valid indices");
        for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
            entries.push((format!("z_{i}{j}{k}"), z(i, j, k)));
        }
        for ((i, j), k) in [((1, 2), 3), ((2, 3), 1), ((3, 1), 2)] {
            entries.push((format!("z_{i}{j}{i}-z_{k}{j}{k}"), &z(i, j, i) - &z(k, j, k)));
        }
    }
    Ok(Catalog {
        title: format!("translation invariants, {}", count(m, "screw")),
        order,
        entries,
        conjectural: false,
        completeness: if m == 3 {
            Completeness::Unknown
        } else {
            Completeness::Complete
        },
    })
}

/// Rank by Gaussian elimination.
pub(crate) fn rank<S: Scalar>(mut rows: Vec<Vec<S>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            let f = row[c].clone() / pivot[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = x.clone() - f.mul_ref(y);
            }
        }
        r += 1;
    }
    r
}

/// Canonical text of each entry, for golden comparisons.
pub fn describe<S: Scalar>(catalog: &Catalog<S>) -> Vec<String> {
    catalog
        .entries
        .iter()
        .map(|(n, p)| format!("{n}: {}", poly::format(p, &catalog.order)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;
    use crate::Rational;

    #[test]
    fn sizes() {
        let n = |c: Result<Catalog<Rational>, ScrewError>| c.unwrap().len();
        assert_eq!(n(so3_vector_invariants(1)), 1);
        assert_eq!(n(so3_vector_invariants(2)), 3);
        assert_eq!(n(so3_vector_invariants(3)), 7);
        assert_eq!(n(so3_sagbi_catalog(1)), 1);
        assert_eq!(n(so3_sagbi_catalog(2)), 4);
        assert_eq!(n(se3_generator_catalog(1)), 2);
        assert_eq!(n(se3_generator_catalog(2)), 6);
        assert_eq!(n(se3_generator_catalog(3)), 14);
        assert_eq!(n(translation_sagbi_catalog(1)), 4);
        assert_eq!(n(translation_sagbi_catalog(2)), 10);
        assert_eq!(n(translation_sagbi_catalog(3)), 21);
        assert!(se3_generator_catalog::<Rational>(4).is_err());
        assert!(translation_sagbi_catalog::<Rational>(0).is_err());
    }

    #[test]
    fn flags() {
        assert!(se3_generator_catalog::<Rational>(3).unwrap().conjectural);
        assert!(!se3_generator_catalog::<Rational>(2).unwrap().conjectural);
        assert_eq!(
            translation_sagbi_catalog::<Rational>(3).unwrap().completeness,
            Completeness::Unknown
        );
        assert_eq!(
            translation_sagbi_catalog::<Rational>(2).unwrap().completeness,
            Completeness::Complete
        );
    }

    #[test]
    fn two_screw_cubic() {
        let cat = translation_sagbi_catalog::<Rational>(2).unwrap();
        let expected = parse(
            "w11*w22*v22 + w11*w23*v23 - w21*w12*v22 - w21*w13*v23 \
             - w21^2*v11 - w21*w22*v12 - w21*w23*v13",
            cat.vars(),
        )
        .unwrap();
        assert_eq!(cat.get("cubic"), Some(&expected));
    }

    #[test]
    fn z_examples() {
        for k in 1..=3 {
            assert!(z_poly::<Rational>(1, 1, k).unwrap().is_zero());
        }
        // ω_n = e_n, v_n = e_n: the rows of z_123 are e1, e2, e3.
        let mut point = vec![Rational::from_i64(0); 18];
        for n in 0..3 {
            point[3 * n + n] = Rational::from_i64(1);
            point[9 + 3 * n + n] = Rational::from_i64(1);
        }
        assert_eq!(
            z_poly::<Rational>(1, 2, 3).unwrap().evaluate(&point).unwrap(),
            Rational::from_i64(1)
        );
        assert_eq!(
            z_poly::<Rational>(2, 1, 3).unwrap().evaluate(&point).unwrap(),
            Rational::from_i64(-1)
        );
        assert!(z_poly::<Rational>(1, 2, 4).is_err());
    }

    #[test]
    fn small_gram_minors() {
        let vs = VariableSet::vectors(2);
        assert_eq!(
            gram_minor::<Rational>(2, &[1], &[1]).unwrap(),
            parse("x11^2 + x12^2 + x13^2", &vs).unwrap()
        );
        let f = gram_minor::<Rational>(2, &[1, 2], &[1, 2]).unwrap();
        let e1e2 = [1, 0, 0, 0, 1, 0].map(Rational::from_i64);
        assert_eq!(f.evaluate(&e1e2).unwrap(), Rational::from_i64(1));
        assert_eq!(
            gram_minor::<Rational>(2, &[1, 2], &[1]),
            Err(ScrewError::LengthMismatch(2, 1))
        );
        assert!(gram_minor::<Rational>(4, &[1, 2, 3, 4], &[1, 2, 3, 4])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn dump_is_a_basis_file() {
        let cat = se3_generator_catalog::<Rational>(2).unwrap();
        let text = cat.dump();
        assert!(text.contains("# klein_12\n"));
        let file = crate::sagbi::parse_basis_file::<Rational>(&text).unwrap();
        assert_eq!(file.polys, cat.polys());
        assert!(se3_generator_catalog::<Rational>(3)
            .unwrap()
            .dump()
            .contains("# conjectural: true"));
    }
}
