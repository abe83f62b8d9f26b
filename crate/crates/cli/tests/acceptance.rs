//! Acceptance criteria, one line each. Runs as a plain binary so the lines always print.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;
use specht_core::combinat::Dipartition;
use specht_core::verify::{self, d_matrices, Options};

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
    (1, 2), (2, 3), (2, 4), (2, 5), (3, 6), (3, 7), (4, 6), (4, 7), (5, 6), (5, 7),
    (6, 8), (7, 8), (8, 9), (8, 10), (8, 11), (9, 12), (10, 12), (11, 12), (12, 13),
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
    (1, 2), (2, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 7), (6, 7), (7, 8),
    (7, 9), (8, 10), (8, 11), (9, 11), (9, 12), (10, 12), (10, 13), (11, 14), (12, 14), (13, 14),
    (14, 15), (14, 16), (15, 17), (16, 17), (17, 18),
];

type Edges = BTreeSet<(String, String)>;

fn canonical(label: &str) -> String {
    Dipartition::parse(label).unwrap().to_string()
}

fn expected(nodes: &[&str], edges: &[(usize, usize)]) -> (BTreeSet<String>, Edges) {
    let labels: Vec<String> = nodes.iter().map(|s| canonical(s)).collect();
    let e = edges
        .iter()
        .map(|&(a, b)| (labels[a - 1].clone(), labels[b - 1].clone()))
        .collect();
    (labels.into_iter().collect(), e)
}

fn cli_poset(n: usize) -> (BTreeSet<String>, Edges) {
    let out = Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(["poset", "--group", "D", "--n", &n.to_string(), "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let labels: Vec<String> = v["nodes"].as_array().unwrap().iter().map(|s| canonical(s.as_str().unwrap())).collect();
    let edges = v["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let a = e[0].as_u64().unwrap() as usize;
            let b = e[1].as_u64().unwrap() as usize;
            (labels[a].clone(), labels[b].clone())
        })
        .collect();
    (labels.into_iter().collect(), edges)
}

fn poset_reproduction() -> Result<String, String> {
    let mut notes = Vec::new();
    for (n, nodes, edges) in [(4, &D4_NODES[..], &D4_EDGES[..]), (5, &D5_NODES[..], &D5_EDGES[..])] {
        let start = Instant::now();
        let got = cli_poset(n);
        let took = start.elapsed();
        let want = expected(nodes, edges);
        if got != want {
            return Err(format!("D{n} differs from the reference diagram"));
        }
        if took > Duration::from_secs(1) {
            return Err(format!("D{n} took {took:?}"));
        }
        notes.push(format!("D{n}: {} nodes, {} edges", got.0.len(), got.1.len()));
    }
    Ok(notes.join("; "))
}

fn main_equivalence_four() -> Result<String, String> {
    let m = d_matrices(4, true).map_err(|e| e.to_string())?;
    let ideal = m.ideal.unwrap();
    if ideal != m.didominance || m.variety != m.didominance {
        return Err("matrices differ".into());
    }
    let related = m.didominance.iter().flatten().filter(|&&b| b).count();
    Ok(format!("13x13 matrices identical ({related} related pairs)"))
}

fn main_equivalence_five() -> Result<String, String> {
    let m = d_matrices(5, true).map_err(|e| e.to_string())?;
    if m.variety != m.didominance {
        return Err("variety matrix differs".into());
    }
    if m.ideal.unwrap() != m.didominance {
        return Err("ideal matrix differs".into());
    }
    Ok("18x18 variety and ideal matrices match didominance".into())
}

fn check(report: &verify::SuiteReport, names: &[&str]) -> Result<String, String> {
    for name in names {
        let c = report.check(name).ok_or(format!("missing check {name}"))?;
        if !c.passed {
            return Err(format!("{name}: {}", c.detail));
        }
    }
    Ok(format!("{} checks", names.len()))
}

fn regression_b_s() -> Result<String, String> {
    let report = verify::ideals_suite(&Options::default()).map_err(|e| e.to_string())?;
    let names: Vec<String> = (1..=4)
        .flat_map(|n| [format!("b{n}_ideal_vs_bidominance"), format!("s{n}_ideal_vs_dominance")])
        .collect();
    check(&report, &names.iter().map(String::as_str).collect::<Vec<_>>())
}

fn antisym_identities() -> Result<String, String> {
    let report = verify::identities_suite(4).map_err(|e| e.to_string())?;
    check(&report, &["antisym_b1", "antisym_b2", "antisym_b3", "antisym_b4"])
}

fn example_membership() -> Result<String, String> {
    let (member, divides) = verify::non_principal_example().map_err(|e| e.to_string())?;
    if member && !divides {
        Ok("f1+f2 in the ideal, g does not divide it".into())
    } else {
        Err(format!("contains={member} divides={divides}"))
    }
}

fn counterexample_witness() -> Result<String, String> {
    let c = verify::no_orbit_partition_witness().map_err(|e| e.to_string())?;
    if c.passed {
        Ok(c.detail.to_string())
    } else {
        Err(c.detail.to_string())
    }
}

fn dihedral() -> Result<String, String> {
    let report = verify::dihedral_suite(3..=12, 1e-9, 2024).map_err(|e| e.to_string())?;
    let names: Vec<String> = (3..=12).map(|n| format!("dihedral_{n}")).collect();
    check(&report, &names.iter().map(String::as_str).collect::<Vec<_>>())
}

fn oracle_agreement() -> Result<String, String> {
    let report = verify::varieties_suite(&Options::default()).map_err(|e| e.to_string())?;
    check(&report, &["oracle_agreement", "zero_coordinate_scan"])?;
    Ok(format!("{} shape/point pairs", report.check("oracle_agreement").unwrap().detail["pairs"]))
}

fn intersection_evidence() -> Result<String, String> {
    let c = verify::intersection_evidence(10).map_err(|e| e.to_string())?;
    if c.passed {
        Ok("slices agree for all degrees <= 10 (bounded-degree evidence, not a proof)".into())
    } else {
        Err(c.detail.to_string())
    }
}

type Criterion = (&'static str, Duration, fn() -> Result<String, String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("poset reproduction", Duration::from_secs(5), poset_reproduction),
        ("main equivalence n=4", Duration::from_secs(600), main_equivalence_four),
        ("main equivalence n=5", Duration::from_secs(3600), main_equivalence_five),
        ("B/S regression n<=4", Duration::from_secs(600), regression_b_s),
        ("antisymmetrization identities", Duration::from_secs(60), antisym_identities),
        ("non-principal membership example", Duration::from_secs(10), example_membership),
        ("no orbit-partition witness", Duration::from_secs(1), counterexample_witness),
        ("dihedral suite 3..12", Duration::from_secs(30), dihedral),
        ("oracle agreement", Duration::from_secs(300), oracle_agreement),
        ("intersection slices d<=10", Duration::from_secs(300), intersection_evidence),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > *budget => Err(format!("over budget: {took:?} > {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(note) => println!("criterion {:>2} PASS {name} [{:.2}s] {note}", i + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} [{:.2}s] {why}", i + 1, took.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
