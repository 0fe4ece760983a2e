use std::sync::Arc;

use proptest::prelude::*;

use screwinv::group::{EuclideanElement, Quaternion, QuaternionElement};
use screwinv::poly::{format, parse, Monomial, Polynomial, TermOrder, VariableSet};
use screwinv::sagbi::{subduct, GeneratorSet};
use screwinv::screw::{joint_type, pitch, MultiScrew, Pitch, Twist};
use screwinv::{Poly, Rational, Scalar};

fn vars() -> Arc<VariableSet> {
    VariableSet::new(["a", "b", "c"]).unwrap()
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform3(0u16..4), -30i64..=30, 1i64..=9), 0..7).prop_map(|terms| {
        Polynomial::from_terms(
            &vars(),
            terms
                .into_iter()
                .map(|(e, n, d)| (Monomial::from_exponents(e.to_vec()), Rational::from_frac(n, d))),
        )
    })
}

fn element() -> impl Strategy<Value = EuclideanElement<Rational>> {
    (prop::array::uniform4(-50i64..=50), prop::array::uniform3(-50i64..=50))
        .prop_filter("nonzero quaternion", |(q, _)| q.iter().any(|&x| x != 0))
        .prop_map(|(q, t)| {
            QuaternionElement {
                quaternion: Quaternion::from_ints(q).unwrap(),
                translation: t.map(Rational::from_i64),
            }
            .element()
        })
}

fn twist() -> impl Strategy<Value = Twist<Rational>> {
    (prop::array::uniform3(-9i64..=9), prop::array::uniform3(-9i64..=9)).prop_map(|(w, v)| Twist::from_ints(w, v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in poly(), g in poly(), p in prop::array::uniform3(-5i64..=5)) {
        let point = p.map(Rational::from_i64);
        let (ef, eg) = (f.evaluate(&point).unwrap(), g.evaluate(&point).unwrap());
        prop_assert_eq!((&f * &g).evaluate(&point).unwrap(), ef.clone() * eg.clone());
        prop_assert_eq!((&f + &g).evaluate(&point).unwrap(), ef + eg);
    }

    #[test]
    fn subduction_certificate_rebuilds_the_input(f in poly(), g in poly(), h in poly()) {
        let order = TermOrder::lex(&vars());
        let seeds: Vec<Poly> = [g, h].into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!seeds.is_empty());
        let basis = GeneratorSet::new(order.clone(), seeds).unwrap();
        let res = subduct(&f, &basis);
        prop_assert_eq!(&(&res.certificate.evaluate(&basis) + &res.remainder), &f);
        let coords = GeneratorSet::new(order, ["a", "b", "c"].map(|v| parse::<Rational>(v, &vars()).unwrap())).unwrap();
        prop_assert!(subduct(&f, &coords).remainder.is_constant());
    }

    #[test]
    fn canonical_text_is_stable(f in poly()) {
        let order = TermOrder::lex(&vars());
        let once = format(&f, &order);
        let twice = format(&parse::<Rational>(&once, &vars()).unwrap(), &order);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn klein_and_killing_forms_are_invariant(g in element(), t in twist()) {
        let moved = g.apply_twist(&t);
        prop_assert_eq!(moved.klein(), t.klein());
        prop_assert_eq!(moved.killing(), t.killing());
    }

    #[test]
    fn pitch_and_joint_type_are_invariant(g in element(), t in twist()) {
        let moved = g.apply_twist(&t);
        prop_assert_eq!(pitch(&moved), pitch(&t));
        prop_assert_eq!(joint_type(&moved), joint_type(&t));
        if let Pitch::Finite(p) = pitch(&t) {
            prop_assert_eq!(p * t.killing(), t.klein());
        }
    }

    #[test]
    fn adjoint_action_composes(g in element(), h in element(), t in twist()) {
        prop_assert_eq!(g.compose(&h).apply_twist(&t), g.apply_twist(&h.apply_twist(&t)));
    }

    #[test]
    fn multiscrew_text_round_trips(ts in prop::collection::vec(twist(), 1..4)) {
        let ms = MultiScrew::new(ts).unwrap();
        prop_assert_eq!(MultiScrew::parse(&ms.to_string()).unwrap(), ms);
    }
}
