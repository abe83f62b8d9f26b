//! Verification suites: each runs a family of exhaustive checks and returns a JSON-ready report.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinat::{
    bidominance_leq, bipartitions, didominance_leq, dipartition_poset, dipartitions, dominance_leq,
    fusion_cover_check, partitions, signed_covers, Dipartition, Partition, Sign,
};
use crate::dihedral::DihedralContext;
use crate::error::Result;
use crate::exactalg::{divides, parse};
use crate::groups::GroupKind;
use crate::identities::check_identities;
use crate::ideals::{contains, ideal_leq, intersection_slices_equal, slice_space, GeneratorSet};
use crate::specht::{generator_set, Shape};
use crate::varieties::{
    in_variety_bruteforce, in_variety_predicted, orbit_datum, representatives, variety_leq, zero_coordinate_scan,
};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    /// Wall time; kept out of the JSON so repeated runs print identical reports.
    #[serde(skip)]
    pub elapsed_ms: u128,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn finish(suite: &str, start: Instant, checks: Vec<Check>) -> Self {
        SuiteReport {
            suite: suite.into(),
            passed: checks.iter().all(|c| c.passed),
            elapsed_ms: start.elapsed().as_millis(),
            checks,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain data")
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub n: usize,
    pub n_max: usize,
    pub b_max: usize,
    pub extended: bool,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            n: 4,
            n_max: 6,
            b_max: 4,
            extended: false,
            tolerance: crate::dihedral::DEFAULT_TOLERANCE,
            seed: 2024,
        }
    }
}

/// Row `i`, column `j` compares element `i` with element `j`.
pub type Matrix = Vec<Vec<bool>>;

fn matrix<T: Sync>(xs: &[T], f: impl Fn(&T, &T) -> Result<bool> + Sync) -> Result<Matrix> {
    xs.par_iter().map(|a| xs.iter().map(|b| f(a, b)).collect()).collect()
}

fn mismatches<T: std::fmt::Display>(labels: &[T], a: &Matrix, b: &Matrix) -> Vec<String> {
    let mut out = Vec::new();
    for (i, (ra, rb)) in a.iter().zip(b).enumerate() {
        for (j, (x, y)) in ra.iter().zip(rb).enumerate() {
            if x != y {
                out.push(format!("{} vs {}", labels[i], labels[j]));
            }
        }
    }
    out
}

/// The three relations on dipartitions of `n`, indexed by [`dipartitions`].
pub struct DMatrices {
    pub shapes: Vec<Dipartition>,
    pub didominance: Matrix,
    /// `I_Θ ⊆ I_Λ`; absent when not requested.
    pub ideal: Option<Matrix>,
    /// `V_Λ ⊆ V_Θ`, so that it lines up with the other two.
    pub variety: Matrix,
}

pub fn d_matrices(n: usize, with_ideals: bool) -> Result<DMatrices> {
    let shapes = dipartitions(n)?;
    let didominance = matrix(&shapes, didominance_leq)?;
    let variety = matrix(&shapes, |a, b| variety_leq(b, a))?;
    let ideal = if with_ideals {
        let sets: Vec<GeneratorSet> = shapes
            .par_iter()
            .map(|d| generator_set(&Shape::D(d.clone())))
            .collect::<Result<_>>()?;
        Some(matrix(&sets, ideal_leq)?)
    } else {
        None
    };
    Ok(DMatrices {
        shapes,
        didominance,
        ideal,
        variety,
    })
}

fn matrix_check(name: &str, labels: &[Dipartition], a: &Matrix, b: &Matrix) -> Check {
    let bad = mismatches(labels, a, b);
    let entries = a.len() * a.len();
    Check::new(name, bad.is_empty(), json!({ "entries": entries, "mismatches": bad }))
}

/// Cover diagrams of the dipartition posets and the structural facts about them.
pub fn poset_suite(ns: &[usize]) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    let known_sizes = [(4usize, 13usize, 19usize), (5, 18, 25)];
    for &n in ns {
        let poset = dipartition_poset(n)?;
        let detail = json!({ "n": n, "nodes": poset.nodes.len(), "edges": poset.edges.len() });
        let passed = known_sizes
            .iter()
            .find(|f| f.0 == n)
            .is_none_or(|&(_, v, e)| poset.nodes.len() == v && poset.edges.len() == e);
        checks.push(Check::new(format!("hasse_d{n}"), passed, detail));
    }
    let top = ns.iter().copied().max().unwrap_or(4).max(6);
    let axioms = (1..=top).all(|n| {
        let all = dipartitions(n).expect("n >= 1");
        let leq = |a: &Dipartition, b: &Dipartition| didominance_leq(a, b).expect("same n");
        all.iter().all(|a| {
            leq(a, a)
                && all.iter().all(|b| {
                    (a == b || !(leq(a, b) && leq(b, a)))
                        && (!leq(a, b) || all.iter().all(|c| !leq(b, c) || leq(a, c)))
                })
        })
    });
    checks.push(Check::new("partial_order", axioms, json!({ "n_max": top })));
    let unique_min = (1..=top).all(|n| {
        let all = dipartitions(n).expect("n >= 1");
        let min = Dipartition::pair(Partition::empty(), Partition::new(&vec![1; n]).expect("ones")).expect("distinct");
        all.iter().all(|b| didominance_leq(&min, b).expect("same n"))
    });
    checks.push(Check::new("unique_minimum", unique_min, json!({ "n_max": top })));
    let mut covers_ok = true;
    for n in (2..=8).step_by(2) {
        let poset = dipartition_poset(n)?;
        for lam in partitions(n / 2) {
            for sign in [Sign::Plus, Sign::Minus] {
                let node = Dipartition::signed(lam.clone(), sign);
                let idx = poset.nodes.iter().position(|d| *d == node).expect("listed");
                let mut lower: Vec<String> = poset
                    .edges
                    .iter()
                    .filter(|e| e.1 == idx)
                    .map(|e| poset.nodes[e.0].to_string())
                    .collect();
                let mut expected: Vec<String> = signed_covers(&lam).iter().map(|d| d.to_string()).collect();
                lower.sort();
                expected.sort();
                covers_ok &= lower == expected;
            }
        }
    }
    checks.push(Check::new("signed_covers", covers_ok, json!({ "n_max": 8 })));
    let fusion_ok = (1..=5).all(|k| partitions(k).iter().all(fusion_cover_check));
    checks.push(Check::new("fusion_covers", fusion_ok, json!({ "k_max": 5 })));
    Ok(SuiteReport::finish("poset", start, checks))
}

fn full_order_check(n: usize) -> Result<(bool, bool)> {
    let bips = bipartitions(n);
    let bsets: Vec<GeneratorSet> = bips.iter().map(|b| generator_set(&Shape::B(b.clone()))).collect::<Result<_>>()?;
    let b_ok = matrix(&bsets, ideal_leq)? == matrix(&bips, bidominance_leq)?;
    let parts = partitions(n);
    let ssets: Vec<GeneratorSet> = parts.iter().map(|p| generator_set(&Shape::S(p.clone()))).collect::<Result<_>>()?;
    let s_ok = matrix(&ssets, ideal_leq)? == matrix(&parts, dominance_leq)?;
    Ok((b_ok, s_ok))
}

/// The ideal side: inclusion matrices, the non-principal membership example and the
/// bounded-degree intersection evidence.
pub fn ideals_suite(opts: &Options) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    let m = d_matrices(opts.n, true)?;
    let ideal = m.ideal.as_ref().expect("requested");
    checks.push(matrix_check(&format!("d{}_ideal_vs_didominance", opts.n), &m.shapes, ideal, &m.didominance));
    checks.push(matrix_check(&format!("d{}_variety_vs_didominance", opts.n), &m.shapes, &m.variety, &m.didominance));
    if opts.extended && opts.n != 5 {
        let m5 = d_matrices(5, true)?;
        let ideal5 = m5.ideal.as_ref().expect("requested");
        checks.push(matrix_check("d5_ideal_vs_didominance", &m5.shapes, ideal5, &m5.didominance));
    }
    for n in 1..=4 {
        let (b_ok, s_ok) = full_order_check(n)?;
        checks.push(Check::new(format!("b{n}_ideal_vs_bidominance"), b_ok, json!({ "n": n })));
        checks.push(Check::new(format!("s{n}_ideal_vs_dominance"), s_ok, json!({ "n": n })));
    }
    let (member, divides_sum) = non_principal_example()?;
    checks.push(Check::new(
        "non_principal_example",
        member && !divides_sum,
        json!({ "contains": member, "divides": divides_sum }),
    ));
    checks.push(intersection_evidence(10)?);
    Ok(SuiteReport::finish("ideals", start, checks))
}

/// `(f1+f2 ∈ I_{{(1,1),+}}, g | f1+f2)` at `n = 4`.
pub fn non_principal_example() -> Result<(bool, bool)> {
    let f1 = parse("(x1^4 - x2^4)*(x3^2 - x4^2)*x3*x4", 4)?;
    let f2 = parse("(x1^2 - x2^2)*(x3^4 - x4^4)*x1*x2", 4)?;
    let g = parse("(x1^2 - x2^2)*(x3^2 - x4^2)*(x1*x2 + x3*x4)", 4)?;
    let sum = &f1 + &f2;
    let ideal = generator_set(&Shape::parse(GroupKind::D, "(1,1)|+")?)?;
    Ok((contains(&ideal, &sum)?, divides(&g, &sum)?.0))
}

/// Degree-by-degree comparison of the two intersections of B-ideals with `I_((1),(2,1))` at
/// `n = 4`. Agreement up to `d_max` is evidence, not a proof of equality.
pub fn intersection_evidence(d_max: usize) -> Result<Check> {
    let b = |s: &str| -> Result<GeneratorSet> { generator_set(&Shape::parse(GroupKind::B, s)?) };
    let (i1, i2) = (b("(2)|(1,1)")?, b("(1,1)|(2)")?);
    let (j1, j2) = (b("(1)|(2,1)")?, b("(2,1)|(1)")?);
    let target = b("(1)|(2,1)")?;
    let rows = intersection_slices_equal((&i1, &i2), (&j1, &j2), d_max)?;
    let mut target_ok = true;
    let mut per_degree = Vec::new();
    for &(d, left, right, equal) in &rows {
        let t = slice_space(&target, d);
        let l = slice_space(&i1, d).intersect(&slice_space(&i2, d));
        let same = l.same_as(&t);
        target_ok &= same;
        per_degree.push(json!({ "degree": d, "rank_left": left, "rank_right": right, "rank_target": t.rank(),
            "equal": equal, "equal_target": same }));
    }
    let passed = target_ok && rows.iter().all(|r| r.3);
    Ok(Check::new(
        "intersection_evidence",
        passed,
        json!({ "kind": "bounded-degree evidence, not a proof", "d_max": d_max, "degrees": per_degree }),
    ))
}

/// Variety oracles: brute force against prediction, inclusion against didominance, the
/// no-orbit-partition witness and the zero-coordinate scan.
pub fn varieties_suite(opts: &Options) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut compared = 0usize;
    let mut disagreements = Vec::new();
    for n in 1..=opts.n_max {
        let shapes = dipartitions(n)?;
        let reps = representatives(n);
        let found: Vec<Vec<String>> = shapes
            .par_iter()
            .map(|d| -> Result<Vec<String>> {
                let shape = Shape::D(d.clone());
                let mut bad = Vec::new();
                for (datum, p) in &reps {
                    if in_variety_bruteforce(&shape, p)? != in_variety_predicted(d, datum)? {
                        bad.push(format!("{d} at {datum}"));
                    }
                }
                Ok(bad)
            })
            .collect::<Result<_>>()?;
        compared += shapes.len() * reps.len();
        disagreements.extend(found.into_iter().flatten());
    }
    checks.push(Check::new(
        "oracle_agreement",
        disagreements.is_empty(),
        json!({ "n_max": opts.n_max, "pairs": compared, "disagreements": disagreements }),
    ));
    let inclusion_max = opts.n_max.min(5);
    let mut bad = Vec::new();
    for n in 1..=inclusion_max {
        let m = d_matrices(n, false)?;
        bad.extend(mismatches(&m.shapes, &m.variety, &m.didominance));
    }
    checks.push(Check::new(
        "variety_inclusion_vs_didominance",
        bad.is_empty(),
        json!({ "n_max": inclusion_max, "mismatches": bad }),
    ));
    checks.push(no_orbit_partition_witness()?);
    let mut found = Vec::new();
    for n in 1..=opts.n_max.min(4) {
        for b in bipartitions(n) {
            if b.first != b.second {
                if let Some(p) = zero_coordinate_scan(&b.first, &b.second, None)? {
                    found.push(format!("{b}: {p:?}"));
                }
            }
        }
    }
    checks.push(Check::new(
        "zero_coordinate_scan",
        found.is_empty(),
        json!({ "n_max": opts.n_max.min(4), "counterexamples": found }),
    ));
    Ok(SuiteReport::finish("varieties", start, checks))
}

/// `(1,1,1,1,2)` lies in `V_{(3,2),∅}` but in neither `V_{(2),(2,1)}` nor `V_{(1,1),(3)}`, and
/// the three shapes are pairwise incomparable.
pub fn no_orbit_partition_witness() -> Result<Check> {
    let shapes: Vec<Dipartition> = ["(3,2)|()", "(2)|(2,1)", "(1,1)|(3)"]
        .iter()
        .map(|s| Dipartition::parse(s))
        .collect::<Result<_>>()?;
    let p: Vec<_> = [1, 1, 1, 1, 2].iter().map(|&v| crate::exactalg::rat(v)).collect();
    let brute: Vec<bool> = shapes
        .iter()
        .map(|d| in_variety_bruteforce(&Shape::D(d.clone()), &p))
        .collect::<Result<_>>()?;
    let datum = orbit_datum(&p);
    let predicted: Vec<bool> = shapes.iter().map(|d| in_variety_predicted(d, &datum)).collect::<Result<_>>()?;
    let mut incomparable = true;
    for (i, a) in shapes.iter().enumerate() {
        for b in &shapes[i + 1..] {
            incomparable &= !didominance_leq(a, b)? && !didominance_leq(b, a)?;
        }
    }
    let passed = brute == [true, false, false] && predicted == brute && incomparable;
    Ok(Check::new(
        "no_orbit_partition_witness",
        passed,
        json!({ "point": "(1,1,1,1,2)", "members": brute, "incomparable": incomparable }),
    ))
}

pub fn dihedral_suite(ns: std::ops::RangeInclusive<u32>, tolerance: f64, seed: u64) -> Result<SuiteReport> {
    let start = Instant::now();
    let reports: Vec<_> = ns
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| DihedralContext::new(n)?.report(tolerance, seed))
        .collect::<Result<_>>()?;
    let checks = reports
        .iter()
        .map(|r| Check::new(format!("dihedral_{}", r.n), r.passed(), r.to_json()))
        .collect();
    Ok(SuiteReport::finish("dihedral", start, checks))
}

pub fn identities_suite(b_max: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let reports: Vec<_> = (1..=b_max)
        .into_par_iter()
        .map(|b| check_identities(b, b <= 3))
        .collect::<Result<_>>()?;
    let checks = reports
        .iter()
        .map(|r| Check::new(format!("antisym_b{}", r.b), r.passed(), serde_json::to_value(r).expect("plain data")))
        .collect();
    Ok(SuiteReport::finish("identities", start, checks))
}
