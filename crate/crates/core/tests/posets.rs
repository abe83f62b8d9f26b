use std::collections::BTreeSet;

use specht_core::combinat::*;

const D4_NODES: [&str; 13] = [
    "()|(1,1,1,1)",
    "(1)|(1,1,1)",
    "()|(2,1,1)",
    "(1,1)|+",
    "(1,1)|-",
    "()|(2,2)",
    "(2)|(1,1)",
    "(1)|(2,1)",
    "()|(3,1)",
    "(2)|+",
    "(2)|-",
    "(1)|(3)",
    "()|(4)",
];

const D4_EDGES: [(usize, usize); 19] = [
    (1, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 6),
    (3, 7),
    (4, 6),
    (4, 7),
    (5, 6),
    (5, 7),
    (6, 8),
    (7, 8),
    (8, 9),
    (8, 10),
    (8, 11),
    (9, 12),
    (10, 12),
    (11, 12),
    (12, 13),
];

const D5_NODES: [&str; 18] = [
    "()|(1,1,1,1,1)",
    "(1)|(1,1,1,1)",
    "(1,1)|(1,1,1)",
    "()|(2,1,1,1)",
    "()|(2,2,1)",
    "(2)|(1,1,1)",
    "(1)|(2,1,1)",
    "(1,1)|(2,1)",
    "()|(3,1,1)",
    "(1)|(2,2)",
    "(1,1)|(3)",
    "()|(3,2)",
    "(2)|(2,1)",
    "(1)|(3,1)",
    "()|(4,1)",
    "(2)|(3)",
    "(1)|(4)",
    "()|(5)",
];

const D5_EDGES: [(usize, usize); 25] = [
    (1, 2),
    (2, 3),
    (2, 4),
    (3, 5),
    (3, 6),
    (4, 5),
    (4, 6),
    (5, 7),
    (6, 7),
    (7, 8),
    (7, 9),
    (8, 10),
    (8, 11),
    (9, 11),
    (9, 12),
    (10, 12),
    (10, 13),
    (11, 14),
    (12, 14),
    (13, 14),
    (14, 15),
    (14, 16),
    (15, 17),
    (16, 17),
    (17, 18),
];

fn reference_edges(n: usize, labels: &[&str], edges: &[(usize, usize)]) -> BTreeSet<(String, String)> {
    let nodes: Vec<Dipartition> = labels.iter().map(|s| Dipartition::parse(s).unwrap()).collect();
    assert!(nodes.iter().all(|d| d.n() == n));
    edges
        .iter()
        .map(|&(a, b)| (nodes[a - 1].to_string(), nodes[b - 1].to_string()))
        .collect()
}

fn computed_edges(n: usize) -> (BTreeSet<String>, BTreeSet<(String, String)>) {
    let poset = dipartition_poset(n).unwrap();
    let nodes = poset.nodes.iter().map(|d| d.to_string()).collect();
    let edges = poset
        .edges
        .iter()
        .map(|&(a, b)| (poset.nodes[a].to_string(), poset.nodes[b].to_string()))
        .collect();
    (nodes, edges)
}

#[test]
fn d4_matches_reference() {
    let (nodes, edges) = computed_edges(4);
    let expected_nodes: BTreeSet<String> = D4_NODES
        .iter()
        .map(|s| Dipartition::parse(s).unwrap().to_string())
        .collect();
    assert_eq!(nodes, expected_nodes);
    assert_eq!(edges, reference_edges(4, &D4_NODES, &D4_EDGES));
    assert_eq!(edges.len(), 19);
}

#[test]
fn d5_matches_reference() {
    let (nodes, edges) = computed_edges(5);
    assert_eq!(nodes.len(), 18);
    let expected_nodes: BTreeSet<String> = D5_NODES
        .iter()
        .map(|s| Dipartition::parse(s).unwrap().to_string())
        .collect();
    assert_eq!(nodes, expected_nodes);
    assert_eq!(edges, reference_edges(5, &D5_NODES, &D5_EDGES));
    assert_eq!(edges.len(), 25);
}

fn assert_partial_order<T: std::fmt::Debug>(xs: &[T], leq: impl Fn(&T, &T) -> bool) {
    for a in xs {
        assert!(leq(a, a), "not reflexive at {a:?}");
        for b in xs {
            if std::ptr::eq(a, b) {
                continue;
            }
            assert!(!(leq(a, b) && leq(b, a)), "not antisymmetric: {a:?} {b:?}");
            if leq(a, b) {
                for c in xs {
                    if leq(b, c) {
                        assert!(leq(a, c), "not transitive: {a:?} {b:?} {c:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn orders_are_partial_orders() {
    for n in 1..=6 {
        assert_partial_order(&partitions(n), |a, b| dominance_leq(a, b).unwrap());
        assert_partial_order(&bipartitions(n), |a, b| bidominance_leq(a, b).unwrap());
        assert_partial_order(&dipartitions(n).unwrap(), |a, b| didominance_leq(a, b).unwrap());
    }
}

#[test]
fn unique_minimum() {
    for n in 1..=7 {
        let all = dipartitions(n).unwrap();
        let min = Dipartition::pair(Partition::empty(), Partition::new(&vec![1; n]).unwrap()).unwrap();
        let minimal: Vec<&Dipartition> = all
            .iter()
            .filter(|a| all.iter().all(|b| *b == **a || !didominance_leq(b, a).unwrap()))
            .collect();
        assert_eq!(minimal, vec![&min], "n={n}");
        assert!(all.iter().all(|b| didominance_leq(&min, b).unwrap()));
    }
}

#[test]
fn signed_covers_match_transitive_reduction() {
    for n in (2..=8).step_by(2) {
        let poset = dipartition_poset(n).unwrap();
        for lam in partitions(n / 2) {
            for sign in [Sign::Plus, Sign::Minus] {
                let node = Dipartition::signed(lam.clone(), sign);
                let idx = poset.nodes.iter().position(|d| *d == node).unwrap();
                let lower: BTreeSet<String> = poset
                    .edges
                    .iter()
                    .filter(|e| e.1 == idx)
                    .map(|e| poset.nodes[e.0].to_string())
                    .collect();
                let expected: BTreeSet<String> = signed_covers(&lam).iter().map(|d| d.to_string()).collect();
                assert_eq!(lower, expected, "n={n} node {node}");
                assert!(poset.edges.iter().filter(|e| e.1 == idx).all(|e| !poset.nodes[e.0].is_signed()));
            }
        }
    }
}

#[test]
fn fusion_cover_correspondence() {
    for k in 1..=5 {
        for lam in partitions(k) {
            assert!(fusion_cover_check(&lam), "{lam}");
        }
    }
}

#[test]
fn didominance_implies_dominance_of_row_sums() {
    for n in 1..=6 {
        let all = dipartitions(n).unwrap();
        for a in &all {
            for b in &all {
                if didominance_leq(a, b).unwrap() {
                    let (x, y) = a.multiset();
                    let (u, v) = b.multiset();
                    assert!(dominance_leq(&row_sum(x, y), &row_sum(u, v)).unwrap(), "{a} {b}");
                }
            }
        }
    }
}
