use std::collections::HashSet;

use specht_core::combinat::{
    bidominance_leq, bipartitions, didominance_leq, dipartitions, dominance_leq, partitions, Bipartition,
};
use specht_core::exactalg::{divides, parse, Polynomial};
use specht_core::groups::{enumerate_group, GroupKind, Permutation, SignedPermutation};
use specht_core::ideals::{
    contains, ideal_leq, intersection_slices_equal, membership_certificate, slice_rank, slice_space, GeneratorSet,
};
use specht_core::specht::{generator_set, orbit, specht_b, Bitableau, Shape, SpechtIndex, Tableau};

fn d_set(text: &str) -> GeneratorSet {
    generator_set(&Shape::parse(GroupKind::D, text).unwrap()).unwrap()
}

#[test]
fn inclusion_matrix_d4_matches_didominance() {
    let shapes = dipartitions(4).unwrap();
    let sets: Vec<GeneratorSet> = shapes
        .iter()
        .map(|d| generator_set(&Shape::D(d.clone())).unwrap())
        .collect();
    for (a, ia) in shapes.iter().zip(&sets) {
        for (b, ib) in shapes.iter().zip(&sets) {
            assert_eq!(
                ideal_leq(ia, ib).unwrap(),
                didominance_leq(a, b).unwrap(),
                "I_{a} <= I_{b}"
            );
        }
    }
}

#[test]
fn inclusion_matrices_b_and_s_match_dominance() {
    for n in 1..=4 {
        let shapes = bipartitions(n);
        let sets: Vec<GeneratorSet> = shapes
            .iter()
            .map(|b| generator_set(&Shape::B(b.clone())).unwrap())
            .collect();
        for (a, ia) in shapes.iter().zip(&sets) {
            for (b, ib) in shapes.iter().zip(&sets) {
                let expected = bidominance_leq(a, b).unwrap();
                assert_eq!(ideal_leq(ia, ib).unwrap(), expected, "I_{a} <= I_{b}");
            }
        }
        let shapes = partitions(n);
        let sets: Vec<GeneratorSet> = shapes
            .iter()
            .map(|p| generator_set(&Shape::S(p.clone())).unwrap())
            .collect();
        for (a, ia) in shapes.iter().zip(&sets) {
            for (b, ib) in shapes.iter().zip(&sets) {
                let expected = dominance_leq(a, b).unwrap();
                assert_eq!(ideal_leq(ia, ib).unwrap(), expected, "I_{a} <= I_{b}");
            }
        }
    }
}

#[test]
fn non_principal_membership_example() {
    let f1 = parse("(x1^4 - x2^4)*(x3^2 - x4^2)*x3*x4", 4).unwrap();
    let f2 = parse("(x1^2 - x2^2)*(x3^4 - x4^4)*x1*x2", 4).unwrap();
    let g = parse("(x1^2 - x2^2)*(x3^2 - x4^2)*(x1*x2 + x3*x4)", 4).unwrap();
    let sum = &f1 + &f2;
    assert!(!divides(&g, &sum).unwrap().0);
    let ideal = d_set("(1,1)|+");
    assert_eq!(ideal.generators()[0], g);
    assert!(contains(&ideal, &sum).unwrap());
    let cert = membership_certificate(&ideal, &sum).unwrap().unwrap();
    assert!(cert.verify(&ideal, &sum));

    let flip = SignedPermutation::flip(4, 1).unwrap();
    let flipped = flip.act(&g).unwrap();
    assert!(!contains(&ideal, &flipped).unwrap());
}

#[test]
fn slice_examples() {
    let linear = d_set("(2)|(1)");
    assert_eq!(slice_rank(&linear, 1), 3);
    let minus = d_set("(1)|-");
    assert_eq!(minus.generators().len(), 1);
    assert_eq!(slice_rank(&minus, 1), 1);
    assert!(contains(&minus, &parse("x1 - x2", 2).unwrap()).unwrap());
    let plus = d_set("(1)|+");
    assert!(!ideal_leq(&plus, &minus).unwrap());
    assert!(!ideal_leq(&minus, &plus).unwrap());
    let unit = generator_set(&Shape::parse(GroupKind::S, "(4)").unwrap()).unwrap();
    assert_eq!(unit.generators(), &[Polynomial::one(4)]);
}

#[test]
fn maximal_pair_is_the_irrelevant_ideal() {
    for n in 3..=5 {
        let shape = format!("({})|(1)", n - 1);
        let ideal = d_set(&shape);
        assert_eq!(slice_rank(&ideal, 1), n, "n={n}");
        for i in 1..=n {
            let x = Polynomial::var(n, i - 1).unwrap();
            assert!(contains(&ideal, &x).unwrap());
        }
    }
}

#[test]
fn minimum_slice_degree_is_generator_degree() {
    for d in dipartitions(4).unwrap() {
        let shape = Shape::D(d.clone());
        let set = generator_set(&shape).unwrap();
        let min = set.min_degree();
        if min > 0 {
            assert_eq!(slice_rank(&set, min - 1), 0, "{d}");
        }
        assert!(slice_rank(&set, min) > 0, "{d}");
        if d.is_signed() {
            assert_eq!(set.degrees().len(), 1);
        }
    }
    for b in bipartitions(4) {
        let set = generator_set(&Shape::B(b)).unwrap();
        assert_eq!(set.degrees().len(), 1);
    }
}

fn all_tableaux(shape: &specht_core::combinat::Partition, labels: &[usize]) -> Vec<Tableau> {
    let k = labels.len();
    let mut out = Vec::new();
    for perm in Permutation::all(k) {
        let filled: Vec<usize> = perm.one_line().iter().map(|&i| labels[i - 1]).collect();
        let mut rows = Vec::new();
        let mut at = 0;
        for &len in shape.parts() {
            rows.push(filled[at..at + len].to_vec());
            at += len;
        }
        out.push(Tableau::new(rows).unwrap());
    }
    out
}

fn up_to_sign(f: &Polynomial) -> String {
    let p = f.primitive();
    p.to_string()
}

#[test]
fn orbit_covers_all_bitableaux_up_to_sign() {
    for n in 1..=4 {
        for b in bipartitions(n) {
            let from_orbit: HashSet<String> = orbit(&Shape::B(b.clone()))
                .unwrap()
                .iter()
                .map(|i| up_to_sign(&i.expand()))
                .collect();
            let mut brute = HashSet::new();
            let k = b.first.size();
            for perm in Permutation::all(n) {
                let line = perm.one_line();
                let (l, r) = line.split_at(k);
                let left = all_tableaux(&b.first, l).swap_remove(0);
                let right = all_tableaux(&b.second, r).swap_remove(0);
                let bt = Bitableau::new(left, right).unwrap();
                brute.insert(up_to_sign(&specht_b(&bt)));
            }
            assert_eq!(from_orbit, brute, "{b}");
        }
    }
}

#[test]
fn ideals_are_invariant_under_their_groups() {
    for n in 2..=4 {
        let b_group: Vec<SignedPermutation> = enumerate_group(GroupKind::B, n).unwrap().collect();
        for b in bipartitions(n) {
            let set = generator_set(&Shape::B(b.clone())).unwrap();
            for g in &b_group {
                for f in set.generators() {
                    assert!(contains(&set, &g.act(f).unwrap()).unwrap(), "{b} under {g}");
                }
            }
        }
        let d_group: Vec<SignedPermutation> = enumerate_group(GroupKind::D, n).unwrap().collect();
        for d in dipartitions(n).unwrap() {
            let set = generator_set(&Shape::D(d.clone())).unwrap();
            for g in &d_group {
                for f in set.generators() {
                    assert!(contains(&set, &g.act(f).unwrap()).unwrap(), "{d} under {g}");
                }
            }
        }
    }
}

#[test]
fn base_generator_is_the_column_filling() {
    let b = Bipartition::parse("(2,1)|(1)").unwrap();
    let base = &SpechtIndex::base(&Shape::B(b.clone()))[0];
    assert_eq!(base.expand(), specht_b(&Bitableau::column_filling(&b)));
    assert_eq!(base.expand().degree() as usize, specht_core::specht::b_specht_degree(&b));
}

fn b_set(text: &str) -> GeneratorSet {
    generator_set(&Shape::parse(GroupKind::B, text).unwrap()).unwrap()
}

#[test]
fn intersection_slices_agree_up_to_degree_ten() {
    let (i1, i2) = (b_set("(2)|(1,1)"), b_set("(1,1)|(2)"));
    let (j1, j2) = (b_set("(1)|(2,1)"), b_set("(2,1)|(1)"));
    let target = b_set("(1)|(2,1)");
    let rows = intersection_slices_equal((&i1, &i2), (&j1, &j2), 10).unwrap();
    assert_eq!(rows.len(), 11);
    for (d, left, right, equal) in rows {
        assert!(equal, "degree {d}: {left} vs {right}");
        let left_space = slice_space(&i1, d).intersect(&slice_space(&i2, d));
        assert!(left_space.same_as(&slice_space(&target, d)), "degree {d}");
    }
}

#[test]
fn certificates_reconstruct_members() {
    let ideal = d_set("(2)|(1,1)");
    let g = &ideal.generators()[0];
    let x1 = Polynomial::var(4, 0).unwrap();
    let x3 = Polynomial::var(4, 2).unwrap();
    let f = &(&x1 * g) - &(&x3 * &ideal.generators()[ideal.generators().len() - 1]);
    let cert = membership_certificate(&ideal, &f).unwrap().unwrap();
    assert!(cert.verify(&ideal, &f));
    let json = cert.to_json();
    assert_eq!(json["member"], true);
    assert!(membership_certificate(&ideal, &x1).unwrap().is_none());
}
