use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ghostcentre::actions::{construct_t, construct_uj, construct_vj, pairing, OddSubset};
use ghostcentre::invariants::{
    anticentre_basis, associative_centre_basis, centralizer_even_basis, centre_basis, SubspaceBasis,
};
use ghostcentre::pbw::parse_element;
use ghostcentre::rational::fmt_q;
use ghostcentre::roothc::{compute_t, hc_projection};
use ghostcentre::suite::{self, CheckResult, DEFAULT_SEED};
use ghostcentre::verma::{
    format_vector, parse_eta, parse_lambda, shapovalov_formula, shapovalov_gram, singular_vectors,
    supercharacter_check,
};
use ghostcentre::{builtin, load_algebra, Error, LieSuperalgebra};

#[derive(Parser)]
#[command(
    name = "ghostcentre",
    version,
    about = "Centre, anticentre and ghost centre of Lie superalgebras"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Algebra definition file (JSON)
    #[arg(long, global = true, value_name = "FILE")]
    algebra: Option<String>,
    /// Bundled algebra: q1, w1, sl2, osp12
    #[arg(long, global = true, value_name = "NAME", conflicts_with = "algebra")]
    builtin: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Run independent checks concurrently
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Load the algebra and check the super-Jacobi identity
    Validate,
    /// Basis of Z(g) in degree <= N
    Centre(Degree),
    /// Basis of A(g) in degree <= N
    Anticentre(Degree),
    /// Centralizer of the even part of U(g) in degree <= N
    Centralizer(Degree),
    /// Ungraded centre of U(g) in degree <= N
    AssocCentre(Degree),
    /// The ghost element T
    Ghost,
    /// Harish-Chandra projection of a weight-zero element
    Hc { expr: String },
    /// The polynomial t
    TPoly,
    /// The pairing (u|v)
    Pair { u: String, v: String },
    /// v_J and u_J for a comma-separated list of odd generators
    Vj {
        #[arg(default_value = "")]
        subset: String,
    },
    /// Check that a ghost-centre element acts on M(lambda) by its supercharacter
    VermaCheck {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long)]
        element: Option<String>,
    },
    /// Singular vectors of M(lambda) up to a depth
    Singular {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Shapovalov Gram matrix and determinant on the weight space lambda - eta
    Shapovalov {
        #[arg(long)]
        eta: String,
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Run the acceptance checks
    Suite {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
struct Degree {
    #[arg(long, default_value_t = 2)]
    degree: usize,
}

#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    algebra: String,
    passed: bool,
    results: Value,
    timing_ms: u128,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::AxiomViolation(_)
            | Error::TopNotTrivial
            | Error::ActionMismatch(_)
            | Error::MixedParity(_)
            | Error::NotInGhostCentre
            | Error::ZeroElement => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Outcome of a command: text lines, structured results, and whether its checks passed.
struct Outcome {
    text: Vec<String>,
    results: Value,
    passed: bool,
}

impl Outcome {
    fn ok(text: Vec<String>, results: Value) -> Self {
        Outcome {
            text,
            results,
            passed: true,
        }
    }
}

fn load(common: &Common) -> Result<Arc<LieSuperalgebra>, Failure> {
    match (&common.algebra, &common.builtin) {
        (Some(path), _) => {
            let src = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("--algebra {path}: {e}")))?;
            Ok(Arc::new(load_algebra(&src)?))
        }
        (None, Some(name)) => builtin::by_name(name).ok_or_else(|| {
            Failure::Usage(format!(
                "--builtin {name}: unknown algebra (expected one of {})",
                builtin::NAMES.join(", ")
            ))
        }),
        (None, None) => Err(Failure::Usage(
            "one of --algebra FILE or --builtin NAME is required".into(),
        )),
    }
}

fn basis_outcome(b: &SubspaceBasis, what: &str) -> Outcome {
    let elems: Vec<String> = b.elements().iter().map(ToString::to_string).collect();
    let mut text = elems.clone();
    text.push(format!("dimension {}", b.dim()));
    Outcome::ok(
        text,
        json!({"subspace": what, "degree": b.degree_bound, "dimension": b.dim(), "elements": elems}),
    )
}

fn checks_outcome(results: Vec<CheckResult>) -> Outcome {
    let text = results
        .iter()
        .map(|r| {
            format!(
                "{} {:<10} {}: {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.id,
                r.name,
                r.detail
            )
        })
        .collect();
    Outcome {
        text,
        passed: suite::all_passed(&results),
        results: serde_json::to_value(&results).expect("serializable"),
    }
}

fn run(cli: &Cli) -> Result<(String, Outcome), Failure> {
    let g = load(&cli.common)?;
    let name = g.name().to_string();
    let out = match &cli.command {
        Command::Validate => {
            let v = g.validate_jacobi();
            let text = vec![format!(
                "{}: {} generators ({} odd), super-Jacobi {}",
                name,
                g.dim(),
                g.odd_dim(),
                if v.is_empty() { "ok" } else { "FAILS" }
            )];
            Outcome {
                text,
                results: json!({"dim": g.dim(), "odd_dim": g.odd_dim(), "jacobi_violations": v.len()}),
                passed: v.is_empty(),
            }
        }
        Command::Centre(d) => basis_outcome(&centre_basis(&g, d.degree), "centre"),
        Command::Anticentre(d) => basis_outcome(&anticentre_basis(&g, d.degree), "anticentre"),
        Command::Centralizer(d) => {
            basis_outcome(&centralizer_even_basis(&g, d.degree), "centralizer")
        }
        Command::AssocCentre(d) => {
            basis_outcome(&associative_centre_basis(&g, d.degree), "assoc-centre")
        }
        Command::Ghost => {
            let t = construct_t(&g)?;
            t.verify().map_err(Failure::Check)?;
            Outcome::ok(
                vec![format!("T = {}", t.value())],
                json!({"T": t.value().to_string()}),
            )
        }
        Command::Hc { expr } => {
            let u = parse_element(&g, expr)?;
            let p = hc_projection(&u)?;
            Outcome::ok(
                vec![format!("P({u}) = {p}")],
                json!({"element": u.to_string(), "hc": p.to_string()}),
            )
        }
        Command::TPoly => {
            let t = compute_t(g.require_root_datum()?);
            Outcome::ok(vec![format!("t = {t}")], json!({"t": t.to_string()}))
        }
        Command::Pair { u, v } => {
            let (a, b) = (parse_element(&g, u)?, parse_element(&g, v)?);
            let p = pairing(&a, &b)?;
            Outcome::ok(
                vec![format!("({a}|{b}) = {p}")],
                json!({"pairing": p.to_string()}),
            )
        }
        Command::Vj { subset } => {
            let j = OddSubset::parse(&g, subset)?;
            let v = construct_vj(&g, j)?;
            let u = construct_uj(&g, j)?;
            let label = j.names(&g).join(",");
            Outcome::ok(
                vec![
                    format!("v_{{{label}}} = {v}"),
                    format!("u_{{{label}}} = {u}"),
                ],
                json!({"J": j.names(&g), "v": v.to_string(), "u": u.to_string()}),
            )
        }
        Command::VermaCheck {
            lambda,
            depth,
            element,
        } => {
            let lambda = parse_lambda(lambda)?;
            let a = match element {
                Some(e) => parse_element(&g, e)?,
                None => construct_t(&g)?.into_value(),
            };
            let r = supercharacter_check(&a, &lambda, *depth)?;
            Outcome::ok(
                vec![
                    format!(
                        "element {a}, depth {depth}, {} basis vectors",
                        r.vectors_checked
                    ),
                    format!("even component: {}", fmt_q(&r.even_scalar)),
                    format!("odd component: {}", fmt_q(&r.odd_scalar)),
                ],
                json!({
                    "element": a.to_string(),
                    "even": fmt_q(&r.even_scalar),
                    "odd": fmt_q(&r.odd_scalar),
                    "vectors": r.vectors_checked,
                }),
            )
        }
        Command::Singular { lambda, depth } => {
            let lambda = parse_lambda(lambda)?;
            let r = singular_vectors(&g, &lambda, *depth)?;
            let fmt_w = |w: &[ghostcentre::Q]| w.iter().map(fmt_q).collect::<Vec<_>>().join(",");
            let mut text: Vec<String> = r
                .vectors
                .iter()
                .map(|(w, v)| format!("weight ({}): {}", fmt_w(w), format_vector(&g, v)))
                .collect();
            text.push(format!("{} singular vectors", r.vectors.len()));
            for p in &r.predictions {
                text.push(format!(
                    "predicted at ({}) from {}*({}): {}",
                    fmt_w(&p.weight),
                    p.n,
                    fmt_w(&p.root),
                    match (p.in_slice, p.found) {
                        (false, _) => "beyond depth",
                        (true, true) => "found",
                        (true, false) => "MISSING",
                    }
                ));
            }
            Outcome {
                text,
                passed: r.predictions_met(),
                results: json!({
                    "vectors": r.vectors.iter().map(|(w, v)| json!({"weight": fmt_w(w), "vector": format_vector(&g, v)})).collect::<Vec<_>>(),
                    "predictions": r.predictions.iter().map(|p| json!({"weight": fmt_w(&p.weight), "n": p.n, "in_slice": p.in_slice, "found": p.found})).collect::<Vec<_>>(),
                }),
            }
        }
        Command::Shapovalov {
            eta,
            symbolic,
            lambda,
        } => {
            let rd = g.require_root_datum()?;
            let eta = parse_eta(rd, eta)?;
            let gram = shapovalov_gram(&g, &eta)?;
            let det = gram.determinant();
            let formula = shapovalov_formula(rd, &eta);
            let ratio = det
                .ratio_to(&formula)
                .filter(|c| c != &ghostcentre::Q::default());
            let mut text = vec![format!("weight space dimension {}", gram.size())];
            if *symbolic || lambda.is_none() {
                for row in &gram.entries {
                    text.push(format!(
                        "[{}]",
                        row.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    ));
                }
            }
            text.push(format!("det = {det}"));
            text.push(format!("formula = {formula}"));
            text.push(match &ratio {
                Some(c) => format!("det = {} * formula", fmt_q(c)),
                None => "det is NOT proportional to the formula".into(),
            });
            let mut results = json!({
                "dimension": gram.size(),
                "det": det.to_string(),
                "formula": formula.to_string(),
                "ratio": ratio.as_ref().map(fmt_q),
            });
            if let Some(l) = lambda {
                let l = parse_lambda(l)?;
                let v = gram.determinant_at(&l);
                text.push(format!("det at lambda = {}", fmt_q(&v)));
                results["det_at_lambda"] = json!(fmt_q(&v));
            }
            Outcome {
                text,
                results,
                passed: ratio.is_some(),
            }
        }
        Command::Suite { seed } => {
            let mut results = suite::algebra_checks(&g, *seed);
            results.extend(suite::acceptance(*seed, cli.common.parallel));
            checks_outcome(results)
        }
    };
    Ok((name, out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let (algebra, outcome) = match run(&cli) {
        Ok(x) => x,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Check(msg)) => {
            let name = load(&cli.common)
                .map(|g| g.name().to_string())
                .unwrap_or_default();
            (
                name,
                Outcome {
                    text: vec![format!("FAIL: {msg}")],
                    results: json!({"error": msg}),
                    passed: false,
                },
            )
        }
    };
    match cli.common.output {
        Output::Text => {
            for l in &outcome.text {
                println!("{l}");
            }
        }
        Output::Json => {
            let report = RunReport {
                command: argv,
                algebra,
                passed: outcome.passed,
                results: outcome.results,
                timing_ms: start.elapsed().as_millis(),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            );
        }
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
