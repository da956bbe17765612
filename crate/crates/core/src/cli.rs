//! JSON document handling for the command-line interface.
//!
//! Every command reads one JSON document and writes one JSON document to
//! stdout; scalars travel as exact decimal or fraction strings, never as
//! floats. Exit codes: 0 for a positive result (solution found, verification
//! passed, all cross-checks passed), 2 for a definite negative (no solution,
//! verification failed, a cross-check identity broken), 1 for malformed
//! input or an unsupported request.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::field::{FieldError, FieldSpec};
use crate::gen::{planted_instance, random_data_instance, GenError, GenParams};
use crate::interp::{
    cross_check_with, solve_subresultant, verify_solution, CheckItem, CrossCheckReport,
    InterpError, InterpolationProblem, ProblemNode, SolveOutcome, SolverRegistry, Tamper,
};
use crate::linalg::{build_confluent_vandermonde, build_data_matrix, LinalgError};
use crate::poly::{PolyError, Polynomial};
use crate::subres::{EngineRegistry, SubresError};

/// Exit code for a positive result.
pub const EXIT_OK: i32 = 0;
/// Exit code for malformed input or an unsupported request.
pub const EXIT_ERROR: i32 = 1;
/// Exit code for a definite negative result.
pub const EXIT_NEGATIVE: i32 = 2;

/// Errors turned into `{"status":"error"}` documents with exit code 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field kind must be \"rational\" or \"prime\", got {0:?}")]
    BadFieldKind(String),
    #[error("prime fields require a \"modulus\" entry")]
    MissingModulus,
    #[error("convention must be \"taylor\" or \"derivative\", got {0:?}")]
    BadConvention(String),
    #[error(
        "the factorial of {j} is not invertible in this field; \
         supply taylor-convention data instead"
    )]
    FactorialNotInvertible { j: usize },
    #[error(
        "unknown tamper target {0:?}; expected \"sylvester-numerator\" \
         or \"determinantal-denominator\""
    )]
    BadTamper(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Subres(#[from] SubresError),
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error(transparent)]
    Gen(#[from] GenError),
}

#[derive(Debug, Deserialize)]
struct FieldDoc {
    kind: String,
    #[serde(default)]
    modulus: Option<String>,
}

#[derive(Debug, Deserialize)]
struct PointDoc {
    x: String,
    values: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct ProblemDoc {
    field: FieldDoc,
    num_degree: usize,
    den_degree: usize,
    #[serde(default)]
    convention: Option<String>,
    points: Vec<PointDoc>,
}

#[derive(Debug, Deserialize)]
struct PairDoc {
    field: FieldDoc,
    f: Vec<String>,
    g: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct CandidateDoc {
    problem: ProblemDoc,
    numerator: Vec<String>,
    denominator: Vec<String>,
}

fn parse_field(doc: &FieldDoc) -> Result<FieldSpec, CliError> {
    match doc.kind.as_str() {
        "rational" => Ok(FieldSpec::rational()),
        "prime" => {
            let modulus = doc.modulus.as_deref().ok_or(CliError::MissingModulus)?;
            parse_field_name(modulus)
        }
        other => Err(CliError::BadFieldKind(other.to_owned())),
    }
}

/// A field from its short name: `q`/`rational`, or a decimal prime modulus.
pub fn parse_field_name(name: &str) -> Result<FieldSpec, CliError> {
    if name.eq_ignore_ascii_case("q") || name == "rational" {
        return Ok(FieldSpec::rational());
    }
    let modulus = name
        .trim()
        .parse::<num_bigint::BigUint>()
        .map_err(|e| CliError::Field(FieldError::Parse {
            text: name.to_owned(),
            reason: e.to_string(),
        }))?;
    Ok(FieldSpec::prime(modulus)?)
}

fn parse_poly(spec: &FieldSpec, coeffs: &[String]) -> Result<Polynomial, CliError> {
    let parsed = coeffs
        .iter()
        .map(|c| spec.parse(c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(spec.clone(), parsed))
}

fn poly_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_text()).collect()
}

/// How incoming data blocks are interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Convention {
    /// Values are Taylor coefficients `h^{(j)}(x)/j!` already.
    Taylor,
    /// Values are plain derivatives `h^{(j)}(x)`; each gets divided by `j!`.
    Derivative,
}

fn resolve_convention(
    doc: Option<&str>,
    flag: Option<&str>,
) -> Result<Convention, CliError> {
    let chosen = flag.or(doc).unwrap_or("taylor");
    match chosen {
        "taylor" => Ok(Convention::Taylor),
        "derivative" => Ok(Convention::Derivative),
        other => Err(CliError::BadConvention(other.to_owned())),
    }
}

/// Build the validated problem from a document, applying the convention.
/// The command-line flag overrides the document's own `convention` entry.
fn build_problem(
    doc: &ProblemDoc,
    flag: Option<&str>,
) -> Result<InterpolationProblem, CliError> {
    let spec = parse_field(&doc.field)?;
    let convention = resolve_convention(doc.convention.as_deref(), flag)?;
    let mut nodes = Vec::with_capacity(doc.points.len());
    for point in &doc.points {
        let x = spec.parse(&point.x)?;
        let mut values = Vec::with_capacity(point.values.len());
        for (j, raw) in point.values.iter().enumerate() {
            let v = spec.parse(raw)?;
            let v = match convention {
                Convention::Taylor => v,
                Convention::Derivative => {
                    let inv = spec
                        .factorial(j)
                        .inv()
                        .map_err(|_| CliError::FactorialNotInvertible { j })?;
                    &v * &inv
                }
            };
            values.push(v);
        }
        nodes.push(ProblemNode { x, values });
    }
    Ok(InterpolationProblem::new(
        spec,
        doc.num_degree,
        doc.den_degree,
        nodes,
    )?)
}

/// Echo a problem back as a document (always in the taylor convention), so
/// failing generated instances can be replayed.
fn problem_document(p: &InterpolationProblem) -> Value {
    let field = match p.field().modulus() {
        None => json!({ "kind": "rational" }),
        Some(m) => json!({ "kind": "prime", "modulus": m.to_string() }),
    };
    let points: Vec<Value> = p
        .nodes()
        .iter()
        .map(|n| {
            json!({
                "x": n.x.to_text(),
                "values": n.values.iter().map(|v| v.to_text()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "field": field,
        "num_degree": p.num_degree(),
        "den_degree": p.den_degree(),
        "convention": "taylor",
        "points": points,
    })
}

fn outcome_document(outcome: &SolveOutcome) -> (Value, i32) {
    match outcome {
        SolveOutcome::ZeroFunction => (
            json!({
                "status": "zero_function",
                "numerator": [],
                "denominator": ["1"],
                "numerator_text": "0",
                "denominator_text": "1",
            }),
            EXIT_OK,
        ),
        SolveOutcome::Solution {
            num,
            den,
            pivot_d,
            method,
        } => (
            json!({
                "status": "solution",
                "method": method.as_str(),
                "pivot_degree": pivot_d,
                "numerator": poly_strings(num),
                "denominator": poly_strings(den),
                "numerator_text": num.to_string(),
                "denominator_text": den.to_string(),
            }),
            EXIT_OK,
        ),
        SolveOutcome::NoSolution { witness } => (
            json!({
                "status": "no_solution",
                "witness": witness_document(witness),
            }),
            EXIT_NEGATIVE,
        ),
    }
}

fn witness_document(witness: &crate::interp::NoSolutionWitness) -> Value {
    use crate::interp::NoSolutionWitness::*;
    match witness {
        NoPivotDegree => json!({ "kind": "no_pivot_degree" }),
        DenominatorVanishes { node_index } => json!({
            "kind": "denominator_vanishes",
            "node_index": node_index,
        }),
    }
}

fn print_debug_matrices(p: &InterpolationProblem) -> Result<(), CliError> {
    let ell = p.ell();
    let v = build_confluent_vandermonde(p.field(), &p.node_pairs(), ell)?;
    let u = build_data_matrix(p.field(), &p.node_points(), ell)?;
    eprintln!(
        "confluent Vandermonde V ({} x {}), rows = powers 0..{}:",
        v.rows(),
        v.cols(),
        ell
    );
    for row in v.render_rows() {
        eprintln!("  {row}");
    }
    eprintln!("data matrix U ({} x {}), rows = powers 0..{}:", u.rows(), u.cols(), ell);
    for row in u.render_rows() {
        eprintln!("  {row}");
    }
    Ok(())
}

/// The document for unexpected failures.
pub fn error_document(message: &str) -> Value {
    json!({ "status": "error", "message": message })
}

/// Pretty-print a document the way every command emits it.
pub fn render_document(doc: &Value) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents are valid JSON");
    text.push('\n');
    text
}

fn to_error(e: CliError) -> (Value, i32) {
    (error_document(&e.to_string()), EXIT_ERROR)
}

/// `solve`: read a problem document, run one strategy, report the outcome.
pub fn cmd_solve(
    input: &str,
    method: &str,
    convention: Option<&str>,
    debug_matrices: bool,
) -> (Value, i32) {
    let inner = || -> Result<(Value, i32), CliError> {
        let doc: ProblemDoc = serde_json::from_str(input)?;
        let problem = build_problem(&doc, convention)?;
        if debug_matrices {
            print_debug_matrices(&problem)?;
        }
        let registry = SolverRegistry::with_builtins();
        let name = if method == "auto" { "subresultant" } else { method };
        let solver = registry.get(name)?;
        let outcome = solver.solve(&problem)?;
        Ok(outcome_document(&outcome))
    };
    inner().unwrap_or_else(to_error)
}

/// `subres`: read a polynomial pair, print the full table of one engine.
pub fn cmd_subres(input: &str, engine: &str) -> (Value, i32) {
    let inner = || -> Result<(Value, i32), CliError> {
        let doc: PairDoc = serde_json::from_str(input)?;
        let spec = parse_field(&doc.field)?;
        let f = parse_poly(&spec, &doc.f)?;
        let g = parse_poly(&spec, &doc.g)?;
        let engine_impl = EngineRegistry::with_builtins().get(engine)?;
        let table = engine_impl.table(&f, &g)?;
        let rows: Vec<Value> = table
            .iter()
            .map(|row| {
                json!({
                    "d": row.d,
                    "sres": poly_strings(&row.sres),
                    "cof_f": poly_strings(&row.cof_f),
                    "cof_g": poly_strings(&row.cof_g),
                })
            })
            .collect();
        Ok((
            json!({ "status": "ok", "engine": engine, "rows": rows }),
            EXIT_OK,
        ))
    };
    inner().unwrap_or_else(to_error)
}

/// `verify`: check a candidate numerator/denominator pair against a problem.
pub fn cmd_verify(input: &str, convention: Option<&str>) -> (Value, i32) {
    let inner = || -> Result<(Value, i32), CliError> {
        let doc: CandidateDoc = serde_json::from_str(input)?;
        let problem = build_problem(&doc.problem, convention)?;
        let num = parse_poly(problem.field(), &doc.numerator)?;
        let den = parse_poly(problem.field(), &doc.denominator)?;
        let report = verify_solution(&problem, &num, &den)?;
        Ok(match report.failure {
            None => (json!({ "status": "pass" }), EXIT_OK),
            Some(failure) => (
                json!({ "status": "fail", "failure": failure.to_string() }),
                EXIT_NEGATIVE,
            ),
        })
    };
    inner().unwrap_or_else(to_error)
}

fn parse_tamper(name: Option<&str>) -> Result<Option<Tamper>, CliError> {
    match name {
        None => Ok(None),
        Some("sylvester-numerator") => Ok(Some(Tamper::SylvesterNumerator)),
        Some("determinantal-denominator") => Ok(Some(Tamper::DeterminantalDenominator)),
        Some(other) => Err(CliError::BadTamper(other.to_owned())),
    }
}

fn report_value(instance: usize, source: &str, report: &CrossCheckReport, problem: &InterpolationProblem) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
        .collect();
    let mut value = json!({
        "instance": instance,
        "source": source,
        "passed": report.passed(),
        "checks": checks,
    });
    if !report.passed() {
        value["problem"] = problem_document(problem);
    }
    value
}

/// `crosscheck` on one explicit problem document.
pub fn cmd_crosscheck_input(input: &str, tamper: Option<&str>) -> (Value, i32) {
    let inner = || -> Result<(Value, i32), CliError> {
        let doc: ProblemDoc = serde_json::from_str(input)?;
        let problem = build_problem(&doc, None)?;
        let tamper = parse_tamper(tamper)?;
        let report = cross_check_with(&problem, tamper)?;
        let passed = report.passed();
        Ok((
            json!({
                "status": if passed { "pass" } else { "fail" },
                "instances": 1,
                "reports": [report_value(0, "input", &report, &problem)],
            }),
            if passed { EXIT_OK } else { EXIT_NEGATIVE },
        ))
    };
    inner().unwrap_or_else(to_error)
}

/// `crosscheck` on generated instances: even indices are planted (with a
/// known answer the solver must recover), odd indices carry random data.
pub fn cmd_crosscheck_seeded(
    seed: u64,
    count: usize,
    max_ell: usize,
    max_mult: usize,
    field: &str,
    tamper: Option<&str>,
) -> (Value, i32) {
    let inner = || -> Result<(Value, i32), CliError> {
        let spec = parse_field_name(field)?;
        let tamper = parse_tamper(tamper)?;
        let params = GenParams {
            max_ell: max_ell.max(1),
            max_mult: max_mult.max(1),
            coeff_bound: 9,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut reports = Vec::with_capacity(count);
        let mut all_pass = true;
        for i in 0..count {
            let (problem, plant) = if i % 2 == 0 {
                let (p, num, den) = planted_instance(&mut rng, &spec, &params)?;
                (p, Some((num, den)))
            } else {
                (random_data_instance(&mut rng, &spec, &params)?, None)
            };
            let mut report = cross_check_with(&problem, tamper)?;
            if let Some((num, den)) = plant {
                let recovered = matches!(
                    solve_subresultant(&problem)?,
                    SolveOutcome::Solution {
                        num: ref got_num,
                        den: ref got_den,
                        ..
                    } if *got_num == num && *got_den == den
                );
                report.checks.push(CheckItem {
                    name: "planted-recovery",
                    pass: recovered,
                    detail: format!(
                        "planted ({}) / ({})",
                        num, den
                    ),
                });
            }
            all_pass &= report.passed();
            let source = if i % 2 == 0 { "planted" } else { "random" };
            reports.push(report_value(i, source, &report, &problem));
        }
        Ok((
            json!({
                "status": if all_pass { "pass" } else { "fail" },
                "seed": seed,
                "field": spec.to_string(),
                "instances": count,
                "reports": reports,
            }),
            if all_pass { EXIT_OK } else { EXIT_NEGATIVE },
        ))
    };
    inner().unwrap_or_else(to_error)
}
