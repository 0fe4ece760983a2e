//! Reproduction suite: every published result the library can check, as a
//! numbered list of exact pass/fail items.

use std::array;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::{
    apply_adjoint, check_invariant_sampled, check_invariant_symbolic, mat_mul, pullback, random_element, ActionKind,
    EuclideanElement, Quaternion, Rotation, DEFAULT_SEED,
};
use crate::poly::{format, parse, Monomial, Polynomial, TermOrder, VariableSet};
use crate::sagbi::{sagbi_construct, subduct, GeneratorSet, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_ITERATIONS};
use crate::screw::{
    dh_invariants, gram_minor, joint_type, se3_generator_catalog, translation_sagbi_catalog, z_poly, JointType,
    MultiScrew, Twist,
};
use crate::{Poly, Rational, Scalar};

/// Cases per property in item 10.
pub const PROPERTY_CASES: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyItem {
    pub number: usize,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// `z_ijk` provider, so a faulty implementation can be swapped in.
pub type ZFn<'a> = &'a dyn Fn(usize, usize, usize) -> Poly;

pub fn reproduction_suite() -> Vec<VerifyItem> {
    reproduction_suite_with(&|i, j, k| z_poly(i, j, k).expect("valid indices"))
}

pub fn reproduction_suite_with(z: ZFn<'_>) -> Vec<VerifyItem> {
    vec![
        single_screw_translation(),
        two_screw_translation(),
        se3_catalog_invariance(),
        three_screw_translation(z),
        bracket_sum_identity(z),
        gram_syzygy(),
        dh_pair(),
        pitch_classes(),
        membership_oracles(),
        property_suites(PROPERTY_CASES),
    ]
}

fn item(number: usize, title: &'static str, pass: bool, detail: impl Into<String>) -> VerifyItem {
    VerifyItem {
        number,
        title,
        pass,
        detail: detail.into(),
    }
}

fn failure(number: usize, title: &'static str, err: impl std::fmt::Display) -> VerifyItem {
    item(number, title, false, format!("error: {err}"))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

/// Runs the translation pullback for `m` screws and returns the generators
/// free of `t`, or `None` when the run is incomplete.
fn translation_invariants(m: usize) -> Result<(bool, Vec<Poly>, TermOrder), String> {
    let system = pullback::<Rational>(ActionKind::TranslationSub, m).map_err(|e| e.to_string())?;
    let seed = system.generator_set().map_err(|e| e.to_string())?;
    let result = sagbi_construct(seed, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_ITERATIONS).map_err(|e| e.to_string())?;
    let inv = result
        .basis
        .restrict_to(&system.space_vars)
        .map_err(|e| e.to_string())?;
    Ok((result.complete, inv.generators().to_vec(), inv.order().clone()))
}

fn single_screw_translation() -> VerifyItem {
    const TITLE: &str = "single-screw translation subalgebra basis";
    let (complete, gens, order) = match translation_invariants(1) {
        Ok(r) => r,
        Err(e) => return failure(1, TITLE, e),
    };
    let shown: Vec<String> = gens.iter().map(|g| format(g, &order)).collect();
    let lms: Vec<&Monomial> = gens.iter().filter_map(|g| g.leading_monomial(&order).ok()).collect();
    let expected: Vec<Monomial> = ["w11", "w12", "w13", "w11*v11"]
        .iter()
        .map(|s| {
            parse::<Rational>(s, order.vars())
                .unwrap()
                .leading_monomial(&order)
                .unwrap()
                .clone()
        })
        .collect();
    let pass = complete
        && lms.len() == 4
        && lms.iter().zip(&expected).all(|(a, b)| *a == b)
        && shown.get(3).map(String::as_str) == Some("w11*v11 + w12*v12 + w13*v13");
    item(
        1,
        TITLE,
        pass,
        format!("complete={complete}; basis: {}", shown.join(", ")),
    )
}

/// The tête-à-tête `ω11 (ω2·v2) − ω21 (ω1·v2 + ω2·v1)` subducted against the
/// other nine translation invariants of two screws.
pub fn two_screw_cubic() -> Poly {
    let vars = VariableSet::screws(2);
    let p = |s: &str| parse::<Rational>(s, &vars).expect("well formed");
    let klein2 = p("w21*v21 + w22*v22 + w23*v23");
    let mixed = p("w11*v21 + w12*v22 + w13*v23 + w21*v11 + w22*v12 + w23*v13");
    let tete = &(&p("w11") * &klein2) - &(&p("w21") * &mixed);
    let nine = ["w11", "w12", "w13", "w21", "w22", "w23", "w11*v11 + w12*v12 + w13*v13"]
        .iter()
        .map(|s| p(s))
        .chain([klein2, mixed]);
    let basis = GeneratorSet::new(TermOrder::lex(&vars), nine).expect("nonconstant");
    subduct(&tete, &basis).remainder
}

/// The fifth two-screw invariant as published, expanded. It has `-w21^2*v23`
/// where the recomputed cubic has `-w13*w21*v23`.
pub const PRINTED_FIFTH: &str = "w11*w22*v22 + w11*w23*v23 - w21*w12*v22 - w21^2*v23 \
     - w21^2*v11 - w21*w22*v12 - w21*w23*v13";

fn two_screw_translation() -> VerifyItem {
    const TITLE: &str = "two-screw translation subalgebra basis";
    let (complete, gens, order) = match translation_invariants(2) {
        Ok(r) => r,
        Err(e) => return failure(2, TITLE, e),
    };
    let vars = VariableSet::screws(2);
    let expected_quadratics = [
        "w11",
        "w12",
        "w13",
        "w21",
        "w22",
        "w23",
        "w11*v11 + w12*v12 + w13*v13",
        "w21*v21 + w22*v22 + w23*v23",
        "w11*v21 + w12*v22 + w13*v23 + w21*v11 + w22*v12 + w23*v13",
    ];
    let cubic = two_screw_cubic();
    let mut missing = Vec::new();
    for s in expected_quadratics {
        let f = parse::<Rational>(s, &vars).unwrap();
        if !gens.contains(&f) {
            missing.push(s.to_string());
        }
    }
    let has_cubic = gens.contains(&cubic);
    let cubic_invariant = check_invariant_symbolic(&cubic, ActionKind::TranslationSub).unwrap_or(false);
    let printed = parse::<Rational>(PRINTED_FIFTH, &vars).unwrap();
    let printed_invariant = check_invariant_symbolic(&printed, ActionKind::TranslationSub).unwrap_or(false);
    let pass = complete && gens.len() == 10 && missing.is_empty() && has_cubic && cubic_invariant;
    item(
        2,
        TITLE,
        pass,
        format!(
            "complete={complete}; {} invariants; cubic {} (translation invariant: {cubic_invariant}); \
             printed form differs: {}, printed form invariant: {printed_invariant}",
            gens.len(),
            format(&cubic, &order),
            printed != cubic,
        ),
    )
}

fn se3_catalog_invariance() -> VerifyItem {
    const TITLE: &str = "SE(3) invariance of the generator catalogs";
    let mut checked = 0;
    let mut failed = Vec::new();
    for m in 1..=3 {
        let cat = match se3_generator_catalog::<Rational>(m) {
            Ok(c) => c,
            Err(e) => return failure(3, TITLE, e),
        };
        for (name, f) in &cat.entries {
            checked += 1;
            if !check_invariant_symbolic(f, ActionKind::FullAdjoint).unwrap_or(false) {
                failed.push(format!("m={m} {name}"));
            }
        }
    }
    let conjectural = se3_generator_catalog::<Rational>(3)
        .map(|c| c.conjectural)
        .unwrap_or(false);
    item(
        3,
        TITLE,
        failed.is_empty() && checked == 22 && conjectural,
        format!(
            "{checked} identities, failures: [{}]; three-screw list conjectural: {conjectural}",
            failed.join(", ")
        ),
    )
}

fn three_screw_translation(z: ZFn<'_>) -> VerifyItem {
    const TITLE: &str = "three-screw translation invariants";
    let cat = match translation_sagbi_catalog::<Rational>(3) {
        Ok(c) => c,
        Err(e) => return failure(4, TITLE, e),
    };
    let mut failed: Vec<String> = cat
        .entries
        .iter()
        .filter(|(_, f)| !check_invariant_symbolic(f, ActionKind::TranslationSub).unwrap_or(false))
        .map(|(n, _)| n.clone())
        .collect();
    let z121 = z(1, 2, 1);
    let z121_alone = check_invariant_symbolic(&z121, ActionKind::TranslationSub).unwrap_or(true);
    if z121_alone {
        failed.push("z_121 alone".into());
    }
    item(
        4,
        TITLE,
        failed.is_empty() && cat.len() == 21,
        format!(
            "{} elements; z_121 alone invariant: {z121_alone}; failures: [{}]",
            cat.len(),
            failed.join(", ")
        ),
    )
}

fn bracket_sum_identity(z: ZFn<'_>) -> VerifyItem {
    const TITLE: &str = "bracket-sum identity";
    let vars = VariableSet::screws(3);
    let col = |p: char, i: usize| -> Vec<Poly> {
        (1..=3)
            .map(|n| Polynomial::var_named(&vars, &format!("{p}{i}{n}")).unwrap())
            .collect()
    };
    let bracket = |a: Vec<Poly>, b: Vec<Poly>, c: Vec<Poly>| det3(&[a, b, c]);
    let brackets = &(&bracket(col('v', 1), col('w', 2), col('w', 3)) + &bracket(col('w', 1), col('v', 2), col('w', 3)))
        + &bracket(col('w', 1), col('w', 2), col('v', 3));
    let zs = &(&z(1, 2, 3) + &z(2, 3, 1)) + &z(3, 1, 2);
    let diff = &zs - &brackets;
    item(
        5,
        TITLE,
        diff.is_zero(),
        format!("difference has {} terms", diff.num_terms()),
    )
}

fn det3(rows: &[Vec<Poly>; 3]) -> Poly {
    let r = rows;
    let minor = |a: usize, b: usize| &(&r[1][a] * &r[2][b]) - &(&r[1][b] * &r[2][a]);
    &(&(&r[0][0] * &minor(1, 2)) - &(&r[0][1] * &minor(0, 2))) + &(&r[0][2] * &minor(0, 1))
}

fn gram_syzygy() -> VerifyItem {
    const TITLE: &str = "4x4 Gram minor syzygy";
    let f = match gram_minor::<Rational>(4, &[1, 2, 3, 4], &[1, 2, 3, 4]) {
        Ok(f) => f,
        Err(e) => return failure(6, TITLE, e),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut nonzero = 0;
    for _ in 0..20 {
        let x: Vec<[Rational; 3]> = (0..4)
            .map(|_| array::from_fn(|_| q(rng.gen_range(-50..=50), rng.gen_range(1..=9))))
            .collect();
        let gram: Vec<Vec<Rational>> = x
            .iter()
            .map(|a| {
                x.iter()
                    .map(|b| a[0].clone() * &b[0] + a[1].clone() * &b[1] + a[2].clone() * &b[2])
                    .collect()
            })
            .collect();
        if !rational_det(gram).is_zero() {
            nonzero += 1;
        }
    }
    item(
        6,
        TITLE,
        f.is_zero() && nonzero == 0,
        format!(
            "expansion has {} terms; {nonzero} of 20 random Gram determinants nonzero",
            f.num_terms()
        ),
    )
}

/// Determinant by fraction-exact Gaussian elimination.
fn rational_det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = q(1, 1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return q(0, 1);
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            let factor = row[c].clone() / &pivot[c];
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= factor.clone() * y;
            }
        }
    }
    det
}

fn dh_pair() -> VerifyItem {
    const TITLE: &str = "DH twist angle and displacement";
    let pair = MultiScrew::new(vec![
        Twist::new([q(0, 1), q(0, 1), q(1, 1)], [q(0, 1), q(0, 1), q(0, 1)]),
        Twist::new([q(0, 1), q(3, 5), q(4, 5)], [q(0, 1), q(-8, 5), q(6, 5)]),
    ])
    .expect("two twists");
    let report = match dh_invariants(&pair) {
        Ok(r) => r,
        Err(e) => return failure(7, TITLE, e),
    };
    let values_ok = report.cos_alpha.exact() == Some(q(4, 5)) && report.d_sin_alpha.exact() == Some(q(6, 5));
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let moved = (0..100)
        .filter(|_| {
            let g = random_element::<Rational, _>(ActionKind::FullAdjoint, &mut rng).element();
            dh_invariants(&apply_adjoint(&g, &pair)).ok().as_ref() != Some(&report)
        })
        .count();
    item(
        7,
        TITLE,
        values_ok && moved == 0,
        format!(
            "cos_alpha={}, d_sin_alpha={}, d={:?}; {moved} of 100 transforms changed the report",
            report.cos_alpha, report.d_sin_alpha, report.d
        ),
    )
}

fn pitch_classes() -> VerifyItem {
    const TITLE: &str = "pitch and joint classification";
    let cases = [
        (Twist::<Rational>::from_ints([0, 0, 1], [0, 0, 0]), JointType::R),
        (Twist::from_ints([0, 0, 0], [1, 0, 0]), JointType::P),
        (Twist::from_ints([0, 0, 1], [0, 0, 3]), JointType::H),
    ];
    let classified = cases.iter().all(|(t, j)| joint_type(t) == Ok(*j));
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut changed = 0;
    for _ in 0..100 {
        let g = random_element::<Rational, _>(ActionKind::FullAdjoint, &mut rng).element();
        for (t, j) in &cases {
            if joint_type(&g.apply_twist(t)) != Ok(*j) {
                changed += 1;
            }
        }
    }
    item(
        8,
        TITLE,
        classified && changed == 0,
        format!("canonical R/P/H: {classified}; {changed} of 300 transformed classifications changed"),
    )
}

fn membership_oracles() -> VerifyItem {
    const TITLE: &str = "membership and sampling oracles agree";
    let cat = match se3_generator_catalog::<Rational>(2) {
        Ok(c) => c,
        Err(e) => return failure(9, TITLE, e),
    };
    let seed = GeneratorSet::new(cat.order.clone(), cat.polys()).expect("nonconstant");
    let result = match sagbi_construct(seed, DEFAULT_DEGREE_BOUND, DEFAULT_MAX_ITERATIONS) {
        Ok(r) => r,
        Err(e) => return failure(9, TITLE, e),
    };
    let vars = cat.vars();
    let mixed = parse::<Rational>("w11*v21 + w12*v22 + w13*v23 + w21*v11 + w22*v12 + w23*v13", vars).unwrap();
    let half = parse::<Rational>("w11*v21 + w12*v22 + w13*v23", vars).unwrap();
    let mixed_member = subduct(&mixed, &result.basis).remainder.is_zero();
    let half_member = subduct(&half, &result.basis).remainder.is_zero();
    let half_sampled = check_invariant_sampled(&half, ActionKind::FullAdjoint, 32, DEFAULT_SEED)
        .map(|r| r.passed())
        .unwrap_or(true);
    item(
        9,
        TITLE,
        mixed_member && !half_member && !half_sampled,
        format!(
            "basis of {} (complete={}); mixed sum member: {mixed_member}; \
             half sum member: {half_member}; half sum sampled invariant: {half_sampled}",
            result.basis.len(),
            result.complete
        ),
    )
}

fn random_poly(rng: &mut ChaCha8Rng, vars: &std::sync::Arc<VariableSet>) -> Poly {
    let n = rng.gen_range(0..=4);
    let terms: Vec<(Monomial, Rational)> = (0..n)
        .map(|_| {
            let e = (0..vars.len()).map(|_| rng.gen_range(0..=2)).collect();
            (
                Monomial::from_exponents(e),
                q(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
            )
        })
        .collect();
    Polynomial::from_terms(vars, terms)
}

fn random_order(rng: &mut ChaCha8Rng, vars: &std::sync::Arc<VariableSet>) -> TermOrder {
    let mut chain: Vec<&str> = vars.names().iter().map(String::as_str).collect();
    for i in (1..chain.len()).rev() {
        chain.swap(i, rng.gen_range(0..=i));
    }
    TermOrder::lex_with(vars, &chain).expect("permutation of the set")
}

fn random_euclidean(rng: &mut ChaCha8Rng) -> EuclideanElement<Rational> {
    random_element::<Rational, _>(ActionKind::FullAdjoint, rng).element()
}

/// Ring axioms, order multiplicativity, parse/format round trip, the
/// adjoint homomorphism, and exact orthogonality, `cases` each.
pub fn property_suites(cases: usize) -> VerifyItem {
    const TITLE: &str = "property suites";
    let vars = VariableSet::new(["x", "y", "z"]).expect("valid");
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut failures: Vec<&str> = Vec::new();
    let mut fail = |name: &'static str| {
        if !failures.contains(&name) {
            failures.push(name);
        }
    };
    let one = Polynomial::one(&vars);
    for _ in 0..cases {
        let (a, b, c) = (
            random_poly(&mut rng, &vars),
            random_poly(&mut rng, &vars),
            random_poly(&mut rng, &vars),
        );
        #[allow(clippy::eq_op)]
        let ring = &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a + &b == &b + &a
            && &a * &b == &b * &a
            && (&a - &a).is_zero()
            && &a * &one == a;
        if !ring {
            fail("ring axioms");
        }

        let order = random_order(&mut rng, &vars);
        let mono = |rng: &mut ChaCha8Rng| Monomial::from_exponents((0..3).map(|_| rng.gen_range(0..=3)).collect());
        let (m1, m2, m3) = (mono(&mut rng), mono(&mut rng), mono(&mut rng));
        if order.cmp(&m1, &m2) != order.cmp(&m1.mul(&m3), &m2.mul(&m3)) {
            fail("order multiplicativity");
        }

        let shown = format(&a, &order);
        if parse::<Rational>(&shown, &vars).ok().as_ref() != Some(&a) {
            fail("parse/format round trip");
        }

        let (g, h) = (random_euclidean(&mut rng), random_euclidean(&mut rng));
        if g.compose(&h).adjoint_matrix() != mat_mul(&g.adjoint_matrix(), &h.adjoint_matrix()) {
            fail("adjoint homomorphism");
        }

        let quat: [i64; 4] = array::from_fn(|_| rng.gen_range(-100..=100));
        if let Ok(qt) = Quaternion::<Rational>::from_ints(quat) {
            let r = Rotation::from_quaternion(&qt);
            if Rotation::new(r.matrix().clone()).is_err() {
                fail("constructor orthogonality");
            }
        }
    }
    item(
        10,
        TITLE,
        failures.is_empty(),
        format!("{cases} cases each; failing: [{}]", failures.join(", ")),
    )
}
