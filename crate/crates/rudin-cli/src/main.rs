//! `rudin` — co-rank of Rudin quotient modules from the command line.
//!
//! Exit codes are part of the contract:
//!   0  success
//!   1  an asserted identity failed (verification suites, cross-checks)
//!   2  unreadable or invalid input
//!   3  a method precondition is not met (e.g. `--method monotone` on a
//!      family that is not monotone for its declared partition)

mod report_file;
mod spec_file;

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use rudin_core::suites::{self, CheckOutcome};
use rudin_core::{
    assemble_point_module, corank_general, corank_monotone, izuchi_published_corank,
    nakayama_corank, pareto_maximal, randomized_min_generators, required_truncation, CorankReport,
    DiscPoint, Error as CoreError, MethodDetail, OrderTuple, TupleReport, ZeroSet,
};

use report_file::CorankReportFile;
use spec_file::FamilySpecFile;

const PUBLISHED_BANNER: &str = "WARNING: the published two-variable formula is KNOWN-INCORRECT on \
repeated-point families.\nIts counts are shown for comparison only and may understate the co-rank.";

#[derive(Parser)]
#[command(
    name = "rudin",
    version,
    about = "Co-rank of Rudin quotient modules over the polydisc",
    long_about = "Computes the minimal number of star-generating vectors of a Rudin quotient \
module, symbolically via Pareto antichains of order tuples and numerically via \
finite-dimensional model-space oracles."
)]
struct Cli {
    /// Seed for randomized numeric checks (falls back to RUDIN_SEED, then 0)
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the co-rank of a family given as a JSON specification
    Corank {
        /// Path to the family specification file
        input: PathBuf,
        /// Which route to use
        #[arg(long, value_enum, default_value_t = MethodArg::General)]
        method: MethodArg,
        /// Also write the full report as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Reduce a list of order tuples to its Pareto-minimal representation
    MinimalRep {
        /// Order tuples, e.g. "(2,1),(1,1),(1,2)"
        #[arg(long)]
        tuples: String,
        /// Optional zero coordinates "re,im" (repeat once per variable);
        /// when given, the numeric rank oracles cross-check the count
        #[arg(long, value_name = "RE,IM", allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// Run randomized verification suites over the symbolic and numeric layers
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Recompute the built-in reference examples and check every claimed value
    PaperExamples {
        /// Also write the comparison table and assertions as JSON to this path
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write the repeated-points family as a spec file usable with `corank`
        #[arg(long, value_name = "PATH")]
        emit_family: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Pareto antichain per tuple class (no monotonicity assumptions)
    General,
    /// Closed-form index count; requires declared monotone directions
    Monotone,
    /// The earlier published formula (known-incorrect, for comparison)
    Izuchi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    /// Blaschke lattice laws, factorization, boundary modulus
    Algebra,
    /// Model-space operator identities
    Operators,
    /// Cross-checks between the symbolic routes and the numeric oracles
    Oracles,
    /// Everything
    All,
}

/// A failed run, carrying the process exit code.
enum Failure {
    /// An asserted identity did not hold (exit 1).
    Assertion(String),
    /// The input could not be read or parsed (exit 2).
    Input(String),
    /// A method was asked to run outside its hypotheses (exit 3).
    Precondition(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Assertion(_) => 1,
            Failure::Input(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Assertion(m) | Failure::Input(m) | Failure::Precondition(m) => m,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(failure) = run(cli) {
        eprintln!("error: {}", failure.message());
        process::exit(failure.code());
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let seed = resolve_seed(cli.seed)?;
    match cli.command {
        Command::Corank {
            input,
            method,
            json,
        } => cmd_corank(&input, method, json.as_deref()),
        Command::MinimalRep { tuples, point } => cmd_minimal_rep(&tuples, &point, seed),
        Command::Verify { suite } => cmd_verify(suite, seed),
        Command::PaperExamples { json, emit_family } => {
            cmd_paper_examples(json.as_deref(), emit_family.as_deref(), seed)
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("RUDIN_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("RUDIN_SEED is not a valid seed: {text:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(err) => Err(Failure::Input(format!("RUDIN_SEED: {err}"))),
    }
}

// ---------------------------------------------------------------- corank --

fn cmd_corank(
    input: &std::path::Path,
    method: MethodArg,
    json: Option<&std::path::Path>,
) -> Result<(), Failure> {
    let text = std::fs::read_to_string(input)
        .map_err(|err| Failure::Input(format!("cannot read {}: {err}", input.display())))?;
    let spec = FamilySpecFile::parse(&text)
        .map_err(|err| Failure::Input(format!("{}: {err}", input.display())))?;
    let (family, increasing) = spec
        .to_family()
        .map_err(|err| Failure::Input(format!("{}: {err}", input.display())))?;

    let report = match method {
        MethodArg::General => corank_general(&family),
        MethodArg::Monotone => {
            if spec.has_undeclared_variable() {
                return Err(Failure::Precondition(
                    "--method monotone needs every variable declared \
                     \"increasing\" or \"decreasing\""
                        .into(),
                ));
            }
            corank_monotone(&family, &increasing).map_err(method_precondition)?
        }
        MethodArg::Izuchi => izuchi_published_corank(&family).map_err(method_precondition)?,
    };

    if method == MethodArg::Izuchi {
        println!("{PUBLISHED_BANNER}\n");
    }
    print!("{}", render_report(&report));

    if let Some(path) = json {
        let file = CorankReportFile::from_report(&report);
        let body = serde_json::to_string_pretty(&file).expect("report serialization is total");
        std::fs::write(path, body + "\n")
            .map_err(|err| Failure::Input(format!("cannot write {}: {err}", path.display())))?;
        println!("report written to {}", path.display());
    }
    Ok(())
}

/// Errors from the monotone and published routes mean the family is outside
/// the method's hypotheses; anything else is an input problem.
fn method_precondition(err: CoreError) -> Failure {
    match &err {
        CoreError::NotMonotone(violations) => {
            let mut msg = String::from("family is not monotone for the declared partition:");
            for v in violations {
                let _ = write!(msg, "\n  {v}");
            }
            Failure::Precondition(msg)
        }
        CoreError::BadVariablePartition(_) | CoreError::NotTwoVariables(_) => {
            Failure::Precondition(err.to_string())
        }
        _ => Failure::Input(err.to_string()),
    }
}

fn render_report(report: &CorankReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "method: {}", report.method.as_str());
    let _ = writeln!(out, "co-rank = {}", report.overall);
    let _ = writeln!(out, "tuple classes: {}", report.per_tuple.len());
    if report.truncated_window {
        let _ = writeln!(
            out,
            "note: some zero sets extend past the window; index lists below are clipped"
        );
    }
    let mut ordered: Vec<&TupleReport> = report.per_tuple.iter().collect();
    ordered.sort_by(|x, y| compare_tuples(x, y));
    for t in ordered {
        let _ = writeln!(
            out,
            "  {}: count {}, Z = {}, minimal representation {}",
            t.tuple,
            t.count,
            render_zero_set(&t.zero_set),
            t.minimal_rep
        );
        match &t.detail {
            MethodDetail::General => {}
            MethodDetail::Monotone {
                r1,
                r2,
                i_set,
                z_tilde,
            } => {
                let _ = writeln!(
                    out,
                    "    monotone: r1 = {r1}, r2 = {r2}, I = {}, Z~ = {}",
                    render_indices(i_set),
                    render_indices(z_tilde)
                );
            }
            MethodDetail::IzuchiPublished { matches } => {
                let _ = writeln!(out, "    joint drop/gain matches = {}", render_indices(matches));
            }
        }
    }
    out
}

/// Human ordering of tuple classes: by modulus, then argument, coordinate
/// by coordinate.
fn compare_tuples(x: &TupleReport, y: &TupleReport) -> Ordering {
    let key = |t: &TupleReport| -> Vec<(f64, f64)> {
        t.tuple
            .primes()
            .iter()
            .map(|p| (p.modulus(), p.im().atan2(p.re())))
            .collect()
    };
    let (a, b) = (key(x), key(y));
    for ((m1, t1), (m2, t2)) in a.iter().zip(&b) {
        let ord = m1.total_cmp(m2).then_with(|| t1.total_cmp(t2));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len())
}

fn render_zero_set(zs: &ZeroSet) -> String {
    let mut parts: Vec<String> = Vec::new();
    if zs.left_unbounded {
        parts.push("…".into());
    }
    parts.extend(zs.indices.iter().map(|k| k.to_string()));
    if zs.right_unbounded {
        parts.push("…".into());
    }
    format!("{{{}}}", parts.join(", "))
}

fn render_indices(indices: &[i64]) -> String {
    format!(
        "{{{}}}",
        indices
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

// ----------------------------------------------------------- minimal-rep --

fn cmd_minimal_rep(tuples: &str, points: &[String], seed: u64) -> Result<(), Failure> {
    let parsed = parse_order_tuples(tuples).map_err(Failure::Input)?;
    let rep = pareto_maximal(&parsed).map_err(|err| Failure::Input(err.to_string()))?;
    println!("input: {} tuples", parsed.len());
    println!("minimal representation: {rep}");
    println!("count = {}", rep.len());

    if points.is_empty() {
        return Ok(());
    }
    let point: Vec<DiscPoint> = points
        .iter()
        .map(|s| parse_point(s))
        .collect::<Result<_, String>>()
        .map_err(Failure::Input)?;
    let arity = parsed[0].len();
    if point.len() != arity {
        return Err(Failure::Input(format!(
            "tuples have {arity} coordinates but {} points were given",
            point.len()
        )));
    }
    let radius = point.iter().map(|p| p.modulus()).fold(0.0, f64::max);
    let degree = parsed
        .iter()
        .flat_map(|t| t.entries().iter().copied())
        .max()
        .expect("tuple list is nonempty");
    let truncation = required_truncation(radius, degree);
    let module = assemble_point_module(&point, &parsed, truncation)
        .map_err(|err| Failure::Input(err.to_string()))?;
    let nakayama = nakayama_corank(&module).map_err(|err| Failure::Input(err.to_string()))?;
    let certificate = randomized_min_generators(&module, 4, seed);
    println!(
        "numeric oracle at ({}): module dimension {}, nakayama co-rank {}",
        point
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        module.dim(),
        nakayama
    );
    println!(
        "randomized generators: r = {} (seed {}, {} trials per level)",
        certificate.r(),
        certificate.seed(),
        certificate.trials()
    );
    if nakayama != rep.len() || certificate.r() != rep.len() {
        return Err(Failure::Assertion(format!(
            "numeric oracles disagree with the antichain count: \
             antichain {}, nakayama {}, randomized {}",
            rep.len(),
            nakayama,
            certificate.r()
        )));
    }
    println!("oracles agree with the antichain count");
    Ok(())
}

/// Parses "(2,1),(1,1)" into order tuples.
fn parse_order_tuples(text: &str) -> Result<Vec<OrderTuple>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    let mut out = Vec::new();
    if rest.is_empty() {
        return Err("expected at least one tuple like (2,1)".into());
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected '(' at {rest:?}"))?;
        let close = body
            .find(')')
            .ok_or_else(|| "missing closing ')'".to_string())?;
        let entries = body[..close]
            .split(',')
            .map(|field| {
                field
                    .parse::<u32>()
                    .map_err(|_| format!("{field:?} is not a multiplicity"))
            })
            .collect::<Result<Vec<u32>, String>>()?;
        out.push(OrderTuple::new(entries).map_err(|err| err.to_string())?);
        rest = &body[close + 1..];
        if let Some(after) = rest.strip_prefix(',') {
            if after.is_empty() {
                return Err("trailing ',' after last tuple".into());
            }
            rest = after;
        } else if !rest.is_empty() {
            return Err(format!("expected ',' between tuples at {rest:?}"));
        }
    }
    Ok(out)
}

/// Parses "re,im" into a point of the open disc.
fn parse_point(text: &str) -> Result<DiscPoint, String> {
    let (re, im) = text
        .split_once(',')
        .ok_or_else(|| format!("{text:?} is not of the form re,im"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|_| format!("{re:?} is not a real number"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|_| format!("{im:?} is not a real number"))?;
    DiscPoint::new(re, im).map_err(|err| err.to_string())
}

// ---------------------------------------------------------------- verify --

fn cmd_verify(suite: SuiteArg, seed: u64) -> Result<(), Failure> {
    let (name, outcomes): (&str, Vec<CheckOutcome>) = match suite {
        SuiteArg::Algebra => ("algebra", suites::algebra_suite(seed)),
        SuiteArg::Operators => ("operators", suites::operators_suite(seed)),
        SuiteArg::Oracles => ("oracles", suites::oracles_suite(seed)),
        SuiteArg::All => ("all", suites::all_suites(seed)),
    };
    println!("suite: {name} (seed {seed})");
    let mut failed = Vec::new();
    for outcome in &outcomes {
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {}: {}", outcome.name, outcome.detail);
        if !outcome.passed {
            failed.push(outcome);
        }
    }
    println!(
        "{} passed, {} failed",
        outcomes.len() - failed.len(),
        failed.len()
    );
    match failed.first() {
        None => Ok(()),
        Some(first) => Err(Failure::Assertion(format!(
            "{} of {} checks failed; first failure: {}: {}",
            failed.len(),
            outcomes.len(),
            first.name,
            first.detail
        ))),
    }
}

// -------------------------------------------------------- paper-examples --

struct Assertion {
    name: String,
    passed: bool,
    detail: String,
}

fn check(assertions: &mut Vec<Assertion>, name: &str, passed: bool, detail: String) {
    println!("[{}] {name}: {detail}", if passed { "OK" } else { "FAIL" });
    assertions.push(Assertion {
        name: name.to_string(),
        passed,
        detail,
    });
}

fn cmd_paper_examples(
    json: Option<&std::path::Path>,
    emit_family: Option<&std::path::Path>,
    seed: u64,
) -> Result<(), Failure> {
    let mut assertions = Vec::new();

    // Distinct zeros: every route and the oracle agree on co-rank 1.
    let distinct = rudin_core::fixtures::distinct_points_example();
    let d_general = corank_general(&distinct.family);
    let d_monotone = corank_monotone(&distinct.family, &distinct.increasing)
        .expect("reference family is monotone");
    let d_published =
        izuchi_published_corank(&distinct.family).expect("reference family is monotone");
    check(
        &mut assertions,
        "distinct zeros",
        d_general.overall == 1,
        format!("general route gives {}, expected 1", d_general.overall),
    );

    // Repeated zeros: the counterexample family.
    let repeated = rudin_core::fixtures::repeated_points_counterexample();
    let family = &repeated.reference.family;
    let r_general = corank_general(family);
    let r_monotone =
        corank_monotone(family, &repeated.reference.increasing).expect("counterexample is monotone");
    let r_published = izuchi_published_corank(family).expect("counterexample is monotone");
    check(
        &mut assertions,
        "repeated zeros, general route",
        r_general.overall == 2,
        format!("co-rank {}, expected 2", r_general.overall),
    );
    check(
        &mut assertions,
        "repeated zeros, monotone route",
        r_monotone.overall == 2,
        format!("co-rank {}, expected 2", r_monotone.overall),
    );

    // The witness is the pair (a, c); every other pair must stay at 1.
    let witness_pair = [repeated.a, repeated.c];
    let witness = r_general
        .per_tuple
        .iter()
        .find(|t| t.tuple.primes() == witness_pair);
    let witness_count = witness.map(|t| t.count).unwrap_or(0);
    let others_max = r_general
        .per_tuple
        .iter()
        .filter(|t| t.tuple.primes() != witness_pair)
        .map(|t| t.count)
        .max()
        .unwrap_or(0);
    check(
        &mut assertions,
        "witness pair",
        witness_count == 2 && others_max <= 1,
        format!(
            "pair ({}, {}) gives {}, all other pairs give at most {}",
            repeated.a, repeated.c, witness_count, others_max
        ),
    );

    check(
        &mut assertions,
        "published formula undercounts",
        r_published.overall == 1 && r_published.overall < r_general.overall,
        format!(
            "published {} < general {}",
            r_published.overall, r_general.overall
        ),
    );

    // Independent numeric oracle on the witness module.
    let numeric_detail;
    let numeric_ok;
    match witness {
        None => {
            numeric_ok = false;
            numeric_detail = "witness pair missing from Λ".to_string();
        }
        Some(t) => {
            let radius = witness_pair.iter().map(|p| p.modulus()).fold(0.0, f64::max);
            let degree = t
                .minimal_rep
                .tuples()
                .iter()
                .flat_map(|ot| ot.entries().iter().copied())
                .max()
                .unwrap_or(1);
            let truncation = required_truncation(radius, degree);
            let module = assemble_point_module(
                &witness_pair,
                t.minimal_rep.tuples(),
                truncation,
            )
            .expect("witness module is desk-scale");
            let nakayama = nakayama_corank(&module).expect("module sits at a single point");
            let randomized = randomized_min_generators(&module, 4, seed).r();
            numeric_ok = nakayama == 2 && randomized == 2;
            numeric_detail = format!(
                "module dimension {}, nakayama {}, randomized {} (seed {seed}), expected 2",
                module.dim(),
                nakayama,
                randomized
            );
        }
    }
    check(&mut assertions, "numeric oracle", numeric_ok, numeric_detail);

    println!();
    println!("example                     general  monotone  published");
    println!(
        "distinct zeros (n=2)       {:>8}  {:>8}  {:>9}",
        d_general.overall, d_monotone.overall, d_published.overall
    );
    println!(
        "repeated zeros (n=2)       {:>8}  {:>8}  {:>9}",
        r_general.overall, r_monotone.overall, r_published.overall
    );

    let failed: Vec<&Assertion> = assertions.iter().filter(|a| !a.passed).collect();
    println!(
        "{} of {} checks passed",
        assertions.len() - failed.len(),
        assertions.len()
    );

    if let Some(path) = emit_family {
        let spec = spec_file::from_family(family, &repeated.reference.increasing);
        let body = serde_json::to_string_pretty(&spec).expect("spec serialization is total");
        std::fs::write(path, body + "\n")
            .map_err(|err| Failure::Input(format!("cannot write {}: {err}", path.display())))?;
        println!("family specification written to {}", path.display());
    }

    if let Some(path) = json {
        let body = serde_json::json!({
            "seed": seed,
            "examples": [
                {
                    "name": "distinct zeros",
                    "general": d_general.overall,
                    "monotone": d_monotone.overall,
                    "published": d_published.overall,
                },
                {
                    "name": "repeated zeros",
                    "general": r_general.overall,
                    "monotone": r_monotone.overall,
                    "published": r_published.overall,
                },
            ],
            "assertions": assertions.iter().map(|a| serde_json::json!({
                "name": a.name,
                "passed": a.passed,
                "detail": a.detail,
            })).collect::<Vec<_>>(),
            "allPassed": failed.is_empty(),
        });
        let text = serde_json::to_string_pretty(&body).expect("json is total");
        std::fs::write(path, text + "\n")
            .map_err(|err| Failure::Input(format!("cannot write {}: {err}", path.display())))?;
        println!("report written to {}", path.display());
    }

    match failed.first() {
        None => Ok(()),
        Some(first) => Err(Failure::Assertion(format!(
            "{}: {}",
            first.name, first.detail
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_tuple_parser_accepts_lists() {
        let tuples = parse_order_tuples("(2,1), (1,1),(1,2)").unwrap();
        assert_eq!(tuples.len(), 3);
        assert_eq!(tuples[0].entries(), &[2, 1]);
        assert_eq!(tuples[2].entries(), &[1, 2]);
    }

    #[test]
    fn order_tuple_parser_rejects_garbage() {
        assert!(parse_order_tuples("").is_err());
        assert!(parse_order_tuples("(2,1),").is_err());
        assert!(parse_order_tuples("(2,x)").is_err());
        assert!(parse_order_tuples("(2,1)(1,2)").is_err());
        assert!(parse_order_tuples("(2,0)").is_err());
        assert!(parse_order_tuples("(2,1").is_err());
    }

    #[test]
    fn point_parser_checks_the_disc() {
        assert_eq!(
            parse_point("0.5, 0").unwrap(),
            DiscPoint::new(0.5, 0.0).unwrap()
        );
        assert!(parse_point("1.25,0").is_err());
        assert!(parse_point("0.5").is_err());
        assert!(parse_point("a,b").is_err());
    }
}
