use proptest::prelude::*;
use rayon::prelude::*;

use specht_core::combinat::{
    bidominance_leq, bipartitions, didominance_leq, dipartitions, partitions, Bipartition, Dipartition, Sign,
};
use specht_core::exactalg::{rat, Rational};
use specht_core::groups::{enumerate_group, GroupKind, SignedPermutation};
use specht_core::specht::Shape;
use specht_core::varieties::*;

fn pt(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

#[test]
fn representatives_round_trip() {
    for n in 1..=7 {
        let reps = representatives(n);
        for (datum, p) in &reps {
            assert_eq!(p.len(), n);
            assert_eq!(b_orbit_type(p), datum.btype, "{p:?}");
            assert_eq!(orbit_datum(p), *datum);
            assert!(nonempty_orbit(&datum.btype));
        }
        let with_orbit = bipartitions(n).into_iter().filter(nonempty_orbit).count();
        let signed = reps.iter().filter(|(d, _)| d.dsign == Some(Sign::Minus)).count();
        assert_eq!(reps.len(), with_orbit + signed);
    }
    assert_eq!(representatives(2).iter().filter(|(d, _)| d.dsign != Some(Sign::Minus)).count(), 4);
}

#[test]
fn oracle_agreement_up_to_six() {
    for n in 1..=6 {
        let shapes = dipartitions(n).unwrap();
        let reps = representatives(n);
        shapes.par_iter().for_each(|d| {
            let shape = Shape::D(d.clone());
            for (datum, p) in &reps {
                assert_eq!(
                    in_variety_bruteforce(&shape, p).unwrap(),
                    in_variety_predicted(d, datum).unwrap(),
                    "{d} at {datum}"
                );
            }
        });
    }
}

#[test]
fn b_oracle_agreement_up_to_five() {
    for n in 1..=5 {
        for b in bipartitions(n) {
            let shape = Shape::B(b.clone());
            for (datum, p) in representatives(n) {
                assert_eq!(
                    in_variety_bruteforce(&shape, &p).unwrap(),
                    in_b_variety_predicted(&b, &datum).unwrap(),
                    "{b} at {datum}"
                );
            }
        }
    }
}

#[test]
fn s_varieties_follow_dominance() {
    for n in 1..=5 {
        for lam in partitions(n) {
            let shape = Shape::S(lam.clone());
            for mu in partitions(n) {
                let mut p = Vec::new();
                for (i, &k) in mu.parts().iter().enumerate() {
                    p.extend(std::iter::repeat_n(rat(i as i64), k));
                }
                let expected = !specht_core::combinat::dominance_leq(&mu, &lam).unwrap();
                assert_eq!(in_variety_bruteforce(&shape, &p).unwrap(), expected, "{lam} at {mu}");
            }
        }
    }
}

#[test]
fn variety_inclusion_reverses_didominance() {
    for n in 1..=5 {
        let shapes = dipartitions(n).unwrap();
        for a in &shapes {
            for b in &shapes {
                assert_eq!(variety_leq(a, b).unwrap(), didominance_leq(b, a).unwrap(), "V_{a} <= V_{b}");
            }
        }
    }
}

#[test]
fn signed_varieties_are_incomparable() {
    let plus = Dipartition::parse("(1,1)|+").unwrap();
    let minus = Dipartition::parse("(1,1)|-").unwrap();
    assert!(!variety_leq(&plus, &minus).unwrap());
    assert!(!variety_leq(&minus, &plus).unwrap());
    assert!(variety_leq(&plus, &plus).unwrap());
}

#[test]
fn no_orbit_partition_witness() {
    let lam = Dipartition::parse("(3,2)|()").unwrap();
    let om = Dipartition::parse("(2)|(2,1)").unwrap();
    let th = Dipartition::parse("(1,1)|(3)").unwrap();
    let p = pt(&[1, 1, 1, 1, 2]);
    assert!(in_variety_bruteforce(&Shape::D(lam.clone()), &p).unwrap());
    assert!(!in_variety_bruteforce(&Shape::D(om.clone()), &p).unwrap());
    assert!(!in_variety_bruteforce(&Shape::D(th.clone()), &p).unwrap());
    let datum = orbit_datum(&p);
    assert!(in_variety_predicted(&lam, &datum).unwrap());
    assert!(!in_variety_predicted(&om, &datum).unwrap());
    assert!(!in_variety_predicted(&th, &datum).unwrap());
    for (x, y) in [(&lam, &om), (&lam, &th), (&om, &th)] {
        assert!(!didominance_leq(x, y).unwrap() && !didominance_leq(y, x).unwrap());
    }
}

#[test]
fn zero_coordinate_scan_finds_nothing() {
    for n in 1..=4 {
        for b in bipartitions(n) {
            if b.first == b.second {
                continue;
            }
            assert_eq!(zero_coordinate_scan(&b.first, &b.second, None).unwrap(), None, "{b}");
        }
    }
    let same = Bipartition::parse("(1,1)|(1,1)").unwrap();
    assert!(zero_coordinate_scan(&same.first, &same.second, None).is_err());
}

#[test]
fn membership_is_invariant_under_the_group() {
    for n in 2..=4 {
        let group: Vec<SignedPermutation> = enumerate_group(GroupKind::D, n).unwrap().collect();
        for d in dipartitions(n).unwrap() {
            let shape = Shape::D(d.clone());
            for (_, p) in representatives(n) {
                let here = in_variety_bruteforce(&shape, &p).unwrap();
                for g in &group {
                    let q = g.act_point(&p).unwrap();
                    assert_eq!(in_variety_bruteforce(&shape, &q).unwrap(), here, "{d} {g}");
                }
            }
        }
    }
}

#[test]
fn bidominance_matches_b_variety_inclusion() {
    for n in 1..=4 {
        let shapes = bipartitions(n);
        let reps = representatives(n);
        for a in &shapes {
            for b in &shapes {
                let included = reps.iter().all(|(_, p)| {
                    !in_variety_bruteforce(&Shape::B(a.clone()), p).unwrap()
                        || in_variety_bruteforce(&Shape::B(b.clone()), p).unwrap()
                });
                assert_eq!(included, bidominance_leq(b, a).unwrap(), "V_{a} <= V_{b}");
            }
        }
    }
}

fn nonzero_point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2), Just(3), Just(-3)], 2..=6)
        .prop_map(|v| pt(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn formal_sign_is_orbit_invariant(p in nonzero_point(), k in 0usize..10_000, i in 0usize..6) {
        let n = p.len();
        let Ok(sign) = formal_sign(&p) else { return Ok(()); };
        let order = GroupKind::D.order(n) as usize;
        let g = enumerate_group(GroupKind::D, n).unwrap().nth(k % order).unwrap();
        prop_assert_eq!(formal_sign(&g.act_point(&p).unwrap()).unwrap(), sign);
        let flip = SignedPermutation::flip(n, i % n + 1).unwrap();
        prop_assert_eq!(formal_sign(&flip.act_point(&p).unwrap()).unwrap(), sign.flip());
    }

    #[test]
    fn orbit_types_are_realizable(v in prop::collection::vec(-3i64..=3, 1..=7)) {
        let p = pt(&v);
        let b = b_orbit_type(&p);
        prop_assert!(nonempty_orbit(&b));
        prop_assert_eq!(b_orbit_type(&canonical_point(&b).unwrap()), b);
    }
}
