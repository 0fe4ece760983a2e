use screwinv::group::{
    check_invariant_sampled, check_invariant_symbolic, pullback, ActionKind, GroupError, DEFAULT_SEED,
};
use screwinv::poly::{parse, VariableSet};
use screwinv::sagbi::{is_member, parse_basis_file, sagbi_construct, subduct, GeneratorSet};
use screwinv::screw::{
    se3_generator_catalog, so3_sagbi_catalog, so3_vector_invariants, translation_sagbi_catalog, Completeness,
};
use screwinv::Rational;

fn symbolic(f: &screwinv::Poly, kind: ActionKind) -> bool {
    check_invariant_symbolic(f, kind).unwrap()
}

#[test]
fn symbolic_and_sampled_checks_agree_on_screw_polynomials() {
    let vars = VariableSet::screws(2);
    let cases = [
        "w11*v11 + w12*v12 + w13*v13",
        "w11*v21 + w12*v22 + w13*v23 + w21*v11 + w22*v12 + w23*v13",
        "w11*v21 + w12*v22 + w13*v23",
        "w11^2 + w12^2 + w13^2",
        "w11",
        "v11*v21 + v12*v22 + v13*v23",
        "w11*w21 + w12*w22 + w13*w23 - 3",
    ];
    for text in cases {
        let f = parse::<Rational>(text, &vars).unwrap();
        for kind in [
            ActionKind::FullAdjoint,
            ActionKind::RotationSub,
            ActionKind::TranslationSub,
        ] {
            let exact = symbolic(&f, kind);
            let sampled = check_invariant_sampled(&f, kind, 16, DEFAULT_SEED).unwrap().passed();
            assert_eq!(exact, sampled, "{text} under {kind}");
        }
    }
}

#[test]
fn full_invariance_implies_both_subgroups() {
    for m in 1..=2 {
        for f in se3_generator_catalog::<Rational>(m).unwrap().polys() {
            assert!(symbolic(&f, ActionKind::RotationSub));
            assert!(symbolic(&f, ActionKind::TranslationSub));
        }
    }
}

#[test]
fn so3_catalogs_are_rotation_invariant() {
    for m in 1..=3 {
        let cat = so3_sagbi_catalog::<Rational>(m).unwrap();
        assert_eq!(cat.completeness, Completeness::Complete);
        for (name, f) in &cat.entries {
            assert!(symbolic(f, ActionKind::RotationSub), "{name}");
            assert!(symbolic(f, ActionKind::TranslationSub), "{name}");
        }
        for (name, f) in &so3_vector_invariants::<Rational>(m).unwrap().entries {
            assert!(symbolic(f, ActionKind::RotationSub), "{name}");
        }
    }
}

#[test]
fn vectors_do_not_translate() {
    let vars = VariableSet::vectors(1);
    let f = parse::<Rational>("x11", &vars).unwrap();
    assert!(symbolic(&f, ActionKind::TranslationSub));
    assert!(!symbolic(&f, ActionKind::RotationSub));
}

#[test]
fn unknown_and_partial_blocks_are_rejected() {
    let vars = VariableSet::new(["w11", "w12"]).unwrap();
    let f = parse::<Rational>("w11", &vars).unwrap();
    assert!(matches!(
        check_invariant_symbolic(&f, ActionKind::FullAdjoint),
        Err(GroupError::IncompleteBlock(_))
    ));
    let vars = VariableSet::new(["y"]).unwrap();
    let f = parse::<Rational>("y", &vars).unwrap();
    assert!(matches!(
        check_invariant_symbolic(&f, ActionKind::FullAdjoint),
        Err(GroupError::UnknownCoordinate(_))
    ));
}

#[test]
fn translation_catalogs_match_their_sagbi_runs() {
    for m in 1..=2 {
        let system = pullback::<Rational>(ActionKind::TranslationSub, m).unwrap();
        let result = sagbi_construct(system.generator_set().unwrap(), 4, 16).unwrap();
        assert!(result.complete);
        let inv = result.basis.restrict_to(&VariableSet::screws(m)).unwrap();
        let cat = translation_sagbi_catalog::<Rational>(m).unwrap();
        assert_eq!(inv.len(), cat.len());
        for f in cat.polys() {
            assert!(inv.generators().contains(&f));
        }
    }
}

#[test]
fn membership_is_definitive_only_when_complete() {
    let cat = se3_generator_catalog::<Rational>(2).unwrap();
    let vars = cat.vars().clone();
    let seed = GeneratorSet::new(cat.order.clone(), cat.polys()).unwrap();
    let result = sagbi_construct(seed, 4, 16).unwrap();
    let half = parse::<Rational>("w11*v21 + w12*v22 + w13*v23", &vars).unwrap();
    let m = is_member(&half, &result);
    assert!(!m.member);
    assert_eq!(m.definitive, result.complete);
    let product = &cat.get("killing_1").unwrap().clone() * cat.get("klein_12").unwrap();
    let m = is_member(&product, &result);
    assert!(m.member && m.definitive);
    assert_eq!(m.certificate.evaluate(&result.basis), product);
}

#[test]
fn catalog_dump_is_a_basis_file() {
    let cat = se3_generator_catalog::<Rational>(3).unwrap();
    let text = cat.dump();
    assert!(text.contains("# conjectural: true"));
    let file = parse_basis_file::<Rational>(&text).unwrap();
    assert_eq!(file.generator_set().unwrap().len(), 14);
    let basis = file.generator_set().unwrap();
    for f in cat.polys() {
        assert!(subduct(&f, &basis).remainder.is_zero());
    }
}

#[test]
fn se3_generators_reach_full_transcendence_degree() {
    use rand::{Rng, SeedableRng};
    use screwinv::Scalar;
    // generic SE(3) orbits on m screws have dimension 6 once m >= 2
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for (m, expected) in [(1, 2), (2, 6), (3, 12)] {
        let cat = se3_generator_catalog::<Rational>(m).unwrap();
        let point: Vec<Rational> = (0..6 * m)
            .map(|_| Rational::from_i64(rng.gen_range(-20..=20)))
            .collect();
        assert_eq!(cat.jacobian_rank(&point).unwrap(), expected, "m={m}");
    }
}

#[test]
fn three_screw_generators_are_linearly_independent() {
    use rand::{Rng, SeedableRng};
    use screwinv::Scalar;
    let cat = se3_generator_catalog::<Rational>(3).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    let points: Vec<Vec<Rational>> = (0..20)
        .map(|_| (0..18).map(|_| Rational::from_i64(rng.gen_range(-20..=20))).collect())
        .collect();
    // no linear relation survives evaluation at 20 random points
    let mut rows: Vec<Vec<Rational>> = cat
        .polys()
        .iter()
        .map(|f| points.iter().map(|p| f.evaluate(p).unwrap()).collect())
        .collect();
    let mut rank = 0;
    for c in 0..20 {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != Rational::from_i64(0)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c].clone() / pivot[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= f.clone() * y.clone();
            }
        }
        rank += 1;
    }
    assert_eq!(rank, 14);
}

#[test]
fn three_screw_list_and_pullback_run_agree_up_to_the_bound() {
    let system = pullback::<Rational>(ActionKind::TranslationSub, 3).unwrap();
    let run = sagbi_construct(system.generator_set().unwrap(), 4, 16).unwrap();
    assert!(run.complete);
    let free = run.basis.restrict_to(&VariableSet::screws(3)).unwrap();
    assert_eq!(free.len(), 26);

    let cat = translation_sagbi_catalog::<Rational>(3).unwrap();
    let listed = sagbi_construct(GeneratorSet::new(cat.order.clone(), cat.polys()).unwrap(), 4, 16).unwrap();
    assert!(listed.complete);
    for f in cat.polys() {
        assert!(subduct(&f, &free).remainder.is_zero());
    }
    for f in free.generators() {
        assert!(subduct(f, &listed.basis).remainder.is_zero());
    }
    // the pairwise cubic is not a subduction of the raw list, only of its completion
    let raw = GeneratorSet::new(cat.order.clone(), cat.polys()).unwrap();
    assert!(free.generators().iter().any(|f| !subduct(f, &raw).remainder.is_zero()));
}
