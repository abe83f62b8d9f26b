use proptest::prelude::*;

use specht_core::exactalg::{divides, parse, rat, Monomial, Polynomial, Rational};
use specht_core::groups::{enumerate_group, GroupKind};

const N: usize = 3;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, N), -4i64..=4, 1i64..=3), 0..5).prop_map(|terms| {
        let mut p = Polynomial::zero(N);
        for (exps, num, den) in terms {
            let m = Polynomial::term(Monomial::new(&exps), Rational::new(num.into(), den.into()));
            p = &p + &m;
        }
        p
    })
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5).prop_map(rat), N)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(N), a.clone());
    }

    #[test]
    fn print_parse_round_trip(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(parse(&text, N).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), p in point()) {
        let (ea, eb) = (a.eval(&p).unwrap(), b.eval(&p).unwrap());
        prop_assert_eq!((&a + &b).eval(&p).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval(&p).unwrap(), ea * eb);
    }

    #[test]
    fn products_are_divisible(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero());
        let (ok, q) = divides(&a, &(&a * &b)).unwrap();
        prop_assert!(ok);
        prop_assert_eq!(q.unwrap(), b);
    }

    #[test]
    fn degree_is_additive(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
    }

    #[test]
    fn group_action_respects_products(a in poly(), b in poly(), k in 0usize..48) {
        let g = enumerate_group(GroupKind::B, N).unwrap().nth(k).unwrap();
        prop_assert_eq!(g.act(&(&a * &b)).unwrap(), &g.act(&a).unwrap() * &g.act(&b).unwrap());
        prop_assert_eq!(g.inverse().act(&g.act(&a).unwrap()).unwrap(), a);
    }
}
