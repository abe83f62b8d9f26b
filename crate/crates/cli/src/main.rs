use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use specht_core::combinat::{bipartition_poset, dipartition_poset, partition_poset, Dipartition};
use specht_core::exactalg::parse;
use specht_core::groups::GroupKind;
use specht_core::ideals::{contains, membership_certificate};
use specht_core::specht::{generator_set, specht_b, specht_d, specht_s, Bitableau, Shape, SpechtIndex, Tableau};
use specht_core::verify::{self, Options, SuiteReport};
use specht_core::Error;

/// Specht ideals and varieties of the reflection groups of types A, B, D and I_2(n).
#[derive(Parser, Debug)]
#[command(name = "specht", version)]
struct Cli {
    /// Worker threads for the verification suites (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Group {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<Group> for GroupKind {
    fn from(g: Group) -> Self {
        match g {
            Group::S => GroupKind::S,
            Group::B => GroupKind::B,
            Group::D => GroupKind::D,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Poset,
    Ideals,
    Varieties,
    Dihedral,
    Identities,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hasse diagram of the (bi/di)partitions of n.
    Poset {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Prints a Specht polynomial.
    Poly {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        shape: String,
        /// Filling as JSON: rows for S, {"left": rows, "right": rows} for B and D.
        #[arg(long)]
        tableau: Option<String>,
        /// Expected size of the shape.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Decides membership of a polynomial in a Specht ideal.
    Member {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Runs verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Single size: ideal matrix order, poset size or dihedral order.
        #[arg(long)]
        n: Option<usize>,
        /// Largest n for the variety oracles.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        b_max: usize,
        /// Also run the n = 5 ideal matrix.
        #[arg(long)]
        extended: bool,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

/// Exit code 2 with a message.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

const POSET_LIMITS: [(GroupKind, usize); 3] = [(GroupKind::S, 12), (GroupKind::B, 10), (GroupKind::D, 8)];

fn parse_shape(group: Group, text: &str, n: Option<usize>) -> Result<Shape, Usage> {
    let shape = Shape::parse(group.into(), text)?;
    if let Some(n) = n {
        if shape.n() != n {
            return Err(Usage(format!("shape {shape} has size {}, not {n}", shape.n())));
        }
    }
    Ok(shape)
}

fn cmd_poset(group: Group, n: usize, format: Format) -> Result<String, Usage> {
    let kind: GroupKind = group.into();
    let limit = POSET_LIMITS.iter().find(|l| l.0 == kind).expect("all kinds listed").1;
    if n == 0 || n > limit {
        return Err(Usage(format!("n must lie in 1..={limit} for group {kind}")));
    }
    let name = format!("{kind}{n}");
    Ok(match (group, format) {
        (Group::S, Format::Dot) => partition_poset(n).to_dot(&name),
        (Group::S, Format::Json) => partition_poset(n).to_json().to_string(),
        (Group::B, Format::Dot) => bipartition_poset(n).to_dot(&name),
        (Group::B, Format::Json) => bipartition_poset(n).to_json().to_string(),
        (Group::D, Format::Dot) => dipartition_poset(n)?.to_dot(&name),
        (Group::D, Format::Json) => dipartition_poset(n)?.to_json().to_string(),
    })
}

fn cmd_poly(group: Group, shape: &str, tableau: Option<&str>, n: Option<usize>) -> Result<String, Usage> {
    let shape = parse_shape(group, shape, n)?;
    let Some(text) = tableau else {
        return Ok(SpechtIndex::base(&shape)[0].expand().to_string());
    };
    let value: Value = serde_json::from_str(text).map_err(|e| Usage(format!("tableau JSON: {e}")))?;
    let poly = match &shape {
        Shape::S(p) => {
            let rows: Vec<Vec<usize>> =
                serde_json::from_value(value).map_err(|e| Usage(format!("tableau rows: {e}")))?;
            let t = Tableau::new(rows)?;
            if t.shape() != p {
                return Err(Usage(format!("tableau has shape {}, expected {p}", t.shape())));
            }
            specht_s(&t)?
        }
        Shape::B(b) => {
            let bt = Bitableau::from_json(&value)?;
            if bt.shape() != *b {
                return Err(Usage(format!("bitableau has shape {}, expected {b}", bt.shape())));
            }
            specht_b(&bt)
        }
        Shape::D(d) => {
            let bt = Bitableau::from_json(&value)?;
            let (left, right) = (bt.left.shape().clone(), bt.right.shape().clone());
            match d {
                Dipartition::Signed(lam, sign) if left == *lam && right == *lam => specht_d(&bt, *sign)?,
                Dipartition::Pair(a, b) if (left == *a && right == *b) || (left == *b && right == *a) => specht_b(&bt),
                _ => return Err(Usage(format!("bitableau has shape {}, expected {d}", bt.shape()))),
            }
        }
    };
    Ok(poly.to_string())
}

fn cmd_member(group: Group, shape: &str, poly: &str, n: Option<usize>) -> Result<Value, Usage> {
    let shape = parse_shape(group, shape, n)?;
    let f = parse(poly, shape.n())?;
    let set = generator_set(&shape)?;
    if !contains(&set, &f)? {
        return Ok(json!({ "group": GroupKind::from(group).to_string(), "shape": shape.to_string(), "member": false }));
    }
    let cert = membership_certificate(&set, &f)?.ok_or_else(|| Usage("certificate search disagreed".into()))?;
    let mut out = cert.to_json();
    out["group"] = GroupKind::from(group).to_string().into();
    out["shape"] = shape.to_string().into();
    out["verified"] = cert.verify(&set, &f).into();
    Ok(out)
}

fn run_suites(suite: Suite, n: Option<usize>, opts: &Options) -> Result<Vec<SuiteReport>, Usage> {
    let wanted = |s: Suite| suite == Suite::All || suite == s;
    let mut out = Vec::new();
    if wanted(Suite::Poset) {
        let ns: Vec<usize> = n.map_or(vec![4, 5], |n| vec![n]);
        if ns.iter().any(|&n| n == 0 || n > 8) {
            return Err(Usage("poset suite needs 1 <= n <= 8".into()));
        }
        out.push(verify::poset_suite(&ns)?);
    }
    if wanted(Suite::Ideals) {
        if opts.n == 0 || opts.n > 6 {
            return Err(Usage("ideal suite needs 1 <= n <= 6".into()));
        }
        out.push(verify::ideals_suite(opts)?);
    }
    if wanted(Suite::Varieties) {
        out.push(verify::varieties_suite(opts)?);
    }
    if wanted(Suite::Dihedral) {
        let range = match n {
            Some(n) if suite == Suite::Dihedral => {
                if n < 3 {
                    return Err(Usage("dihedral order must be at least 3".into()));
                }
                n as u32..=n as u32
            }
            _ => 3..=12,
        };
        out.push(verify::dihedral_suite(range, opts.tolerance, opts.seed)?);
    }
    if wanted(Suite::Identities) {
        out.push(verify::identities_suite(opts.b_max)?);
    }
    Ok(out)
}

fn render_pretty(reports: &[SuiteReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!(
            "{} {} ({} ms)\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.suite,
            r.elapsed_ms
        ));
        for c in &r.checks {
            s.push_str(&format!("  {} {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name));
        }
    }
    s
}

fn run(cli: Cli) -> Result<(String, bool), Usage> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| Usage(e.to_string()))?;
    }
    let pretty_json = |v: &Value| {
        if cli.pretty {
            serde_json::to_string_pretty(v).expect("valid JSON")
        } else {
            v.to_string()
        }
    };
    match &cli.command {
        Command::Poset { group, n, format } => Ok((cmd_poset(*group, *n, *format)?, true)),
        Command::Poly {
            group,
            shape,
            tableau,
            n,
        } => Ok((cmd_poly(*group, shape, tableau.as_deref(), *n)?, true)),
        Command::Member { group, shape, poly, n } => Ok((pretty_json(&cmd_member(*group, shape, poly, *n)?), true)),
        Command::Verify {
            suite,
            n,
            n_max,
            b_max,
            extended,
            tolerance,
            seed,
        } => {
            let opts = Options {
                n: if *suite == Suite::Dihedral || *suite == Suite::Poset { 4 } else { n.unwrap_or(4) },
                n_max: *n_max,
                b_max: *b_max,
                extended: *extended,
                tolerance: *tolerance,
                seed: *seed,
            };
            let reports = run_suites(*suite, *n, &opts)?;
            let passed = reports.iter().all(|r| r.passed);
            let text = if cli.pretty {
                render_pretty(&reports)
            } else {
                json!({
                    "passed": passed,
                    "suites": reports.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
                })
                .to_string()
            };
            Ok((text, passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok((text, passed)) => {
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
