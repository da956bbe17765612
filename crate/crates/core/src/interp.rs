//! Rational interpolation with prescribed numerator/denominator degree
//! bounds, from Taylor data at distinct nodes with multiplicities.
//!
//! A problem fixes degree caps `a` (numerator) and `b` (denominator) with
//! nodes whose multiplicities sum to `a + b + 1`. The sought object is a
//! rational function `A/B` with `deg A <= a`, `deg B <= b`, `B` nonzero at
//! every node, whose Taylor expansion at node `x_i` matches the given values
//! to order `a_i`. Three interchangeable strategies implement the [`Solver`]
//! trait and can be picked from the [`SolverRegistry`] by name:
//!
//! * `subresultant` — builds the node polynomial `f` and the Hermite
//!   interpolant `g`, then reads the answer off the subresultant table of
//!   `(f, g)` at the pivot row;
//! * `sylvester` — multiplicity-free problems only: evaluates single sums
//!   over subsets of the nodes, which reproduce the same row exactly;
//! * `determinantal` — bordered confluent-Vandermonde determinants, which
//!   reproduce the same row up to one common scalar.
//!
//! All three classify failures identically: either no admissible pivot
//! degree exists, or the candidate denominator vanishes at a node. The
//! [`cross_check`] routine runs every applicable strategy and asserts the
//! exact algebraic relations between their raw outputs.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::linalg::{
    build_confluent_vandermonde, build_data_matrix, BorderedMatrix, LinalgError, Matrix,
};
use crate::poly::{Degree, PolyError, Polynomial, RationalFunction};
use crate::subres::{find_pivot_degree, PrsEngine, SubresEngine, SubresError};

/// Errors raised by problem construction and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    /// Multiplicities must sum to `num_degree + den_degree + 1`.
    #[error("multiplicities sum to {got}, expected num_degree + den_degree + 1 = {expected}")]
    BudgetMismatch { expected: usize, got: usize },
    /// Two nodes coincide.
    #[error("repeated node {0}")]
    RepeatedNode(String),
    /// A node has no data values (multiplicity zero).
    #[error("node {0} has an empty data block")]
    EmptyDataBlock(String),
    /// A node or value belongs to a different field than the problem.
    #[error("node or value from a different field than the problem")]
    MixedFields,
    /// The chosen method cannot handle this problem.
    #[error("method {method} does not support this problem: {reason}")]
    Unsupported {
        method: &'static str,
        reason: String,
    },
    /// No solver registered under the requested name.
    #[error("unknown solver {0:?}")]
    UnknownMethod(String),
    /// A zero denominator polynomial was supplied.
    #[error("zero denominator polynomial")]
    ZeroDenominator,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Subres(#[from] SubresError),
}

/// One node: its position and the prescribed Taylor coefficients
/// `value[j] ~ h^{(j)}(x)/j!`; the multiplicity is the number of values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemNode {
    /// The node position.
    pub x: FieldElement,
    /// Taylor coefficients prescribed at `x`, lowest order first.
    pub values: Vec<FieldElement>,
}

/// A validated interpolation problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationProblem {
    field: FieldSpec,
    num_degree: usize,
    den_degree: usize,
    nodes: Vec<ProblemNode>,
}

impl InterpolationProblem {
    /// Validate and build: nodes distinct and from the right field, every
    /// data block nonempty, multiplicities summing to
    /// `num_degree + den_degree + 1`.
    pub fn new(
        field: FieldSpec,
        num_degree: usize,
        den_degree: usize,
        nodes: Vec<ProblemNode>,
    ) -> Result<InterpolationProblem, InterpError> {
        for node in &nodes {
            if node.x.spec() != &field || node.values.iter().any(|v| v.spec() != &field) {
                return Err(InterpError::MixedFields);
            }
            if node.values.is_empty() {
                return Err(InterpError::EmptyDataBlock(node.x.to_text()));
            }
        }
        for (i, node) in nodes.iter().enumerate() {
            if nodes[..i].iter().any(|other| other.x == node.x) {
                return Err(InterpError::RepeatedNode(node.x.to_text()));
            }
        }
        let expected = num_degree + den_degree + 1;
        let got = nodes.iter().map(|n| n.values.len()).sum::<usize>();
        if got != expected {
            return Err(InterpError::BudgetMismatch { expected, got });
        }
        Ok(InterpolationProblem {
            field,
            num_degree,
            den_degree,
            nodes,
        })
    }

    /// The coefficient field.
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// The numerator degree cap `a`.
    pub fn num_degree(&self) -> usize {
        self.num_degree
    }

    /// The denominator degree cap `b`.
    pub fn den_degree(&self) -> usize {
        self.den_degree
    }

    /// The nodes with their data blocks.
    pub fn nodes(&self) -> &[ProblemNode] {
        &self.nodes
    }

    /// `ell = a + b`; the data budget is `ell + 1`.
    pub fn ell(&self) -> usize {
        self.num_degree + self.den_degree
    }

    /// Whether every node has multiplicity 1 (the Cauchy case).
    pub fn is_multiplicity_free(&self) -> bool {
        self.nodes.iter().all(|n| n.values.len() == 1)
    }

    /// Whether every prescribed value is zero.
    pub fn all_values_zero(&self) -> bool {
        self.nodes
            .iter()
            .all(|n| n.values.iter().all(FieldElement::is_zero))
    }

    /// Node positions with multiplicities, in problem order.
    pub fn node_pairs(&self) -> Vec<(FieldElement, usize)> {
        self.nodes
            .iter()
            .map(|n| (n.x.clone(), n.values.len()))
            .collect()
    }

    /// Node positions with data blocks, in problem order.
    pub fn node_points(&self) -> Vec<(FieldElement, Vec<FieldElement>)> {
        self.nodes
            .iter()
            .map(|n| (n.x.clone(), n.values.clone()))
            .collect()
    }

    /// All data values flattened in node-major, order-minor order.
    pub fn flat_values(&self) -> Vec<FieldElement> {
        self.nodes
            .iter()
            .flat_map(|n| n.values.iter().cloned())
            .collect()
    }

    /// The monic node polynomial `prod (x - x_i)^{a_i}` of degree `ell + 1`.
    pub fn node_poly(&self) -> Result<Polynomial, InterpError> {
        Ok(Polynomial::from_roots(&self.field, &self.node_pairs())?)
    }
}

/// The unique polynomial of degree at most `ell` matching all prescribed
/// Taylor data: Lagrange interpolation when every multiplicity is 1, Hermite
/// interpolation in general. Solves the transposed confluent-Vandermonde
/// system, which is nonsingular for distinct nodes.
pub fn hermite_interpolant(p: &InterpolationProblem) -> Result<Polynomial, InterpError> {
    let v = build_confluent_vandermonde(&p.field, &p.node_pairs(), p.ell())?;
    let coeffs = v.transpose().solve(&p.flat_values())?;
    Ok(Polynomial::new(p.field.clone(), coeffs))
}

/// The same interpolant from the bordered-determinant formula
/// `g = -det([V with monomial border; data row with zero border]) / det(V)`;
/// an independent route kept for cross-validation.
pub fn hermite_interpolant_determinantal(
    p: &InterpolationProblem,
) -> Result<Polynomial, InterpError> {
    let ell = p.ell();
    let v_full = build_confluent_vandermonde(&p.field, &p.node_pairs(), ell)?;
    let det_v = v_full.det()?;
    let a0 = determinantal_numerator(p, ell)?;
    let inv = det_v.inv().expect("distinct nodes give a nonsingular matrix");
    Ok(a0.scale(&inv))
}

/// Solver identifiers, used for registry lookup and reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Subresultant table of the node polynomial and Hermite interpolant.
    Subresultant,
    /// Sylvester-style single sums (multiplicity-free problems).
    Sylvester,
    /// Bordered confluent-Vandermonde determinants.
    Determinantal,
}

impl Method {
    /// The registry name.
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Subresultant => "subresultant",
            Method::Sylvester => "sylvester",
            Method::Determinantal => "determinantal",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why a problem has no solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoSolutionWitness {
    /// Every subresultant of index `<= a` vanishes.
    NoPivotDegree,
    /// The candidate denominator vanishes at the node with this index.
    DenominatorVanishes { node_index: usize },
}

/// The outcome of a solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Every prescribed value was zero; the zero function is the answer.
    ZeroFunction,
    /// A solution in canonical form (numerator monic, gcd 1).
    Solution {
        num: Polynomial,
        den: Polynomial,
        pivot_d: usize,
        method: Method,
    },
    /// Provably no admissible rational function exists.
    NoSolution { witness: NoSolutionWitness },
}

/// A solver's raw answer before classification: the pivot degree it found,
/// if any, with its unnormalized numerator/denominator pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSolve {
    /// `None` when every admissible subresultant vanishes.
    pub pivot: Option<RawPivot>,
}

/// The raw pivot data of one solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPivot {
    /// The pivot degree.
    pub d: usize,
    /// Unnormalized numerator.
    pub num: Polynomial,
    /// Unnormalized denominator.
    pub den: Polynomial,
}

/// Canonical form of a candidate pair: reduce by the gcd and make the
/// numerator monic; the zero numerator canonicalizes to `(0, 1)`. Errors on a
/// zero denominator.
pub fn normalize_canonical(
    num: &Polynomial,
    den: &Polynomial,
) -> Result<(Polynomial, Polynomial), InterpError> {
    let rf = RationalFunction::new(num, den).map_err(|e| match e {
        PolyError::ZeroDenominator => InterpError::ZeroDenominator,
        other => InterpError::Poly(other),
    })?;
    Ok((rf.num().clone(), rf.den().clone()))
}

/// Shared classification of a raw solve into the final outcome.
fn classify(
    p: &InterpolationProblem,
    raw: RawSolve,
    method: Method,
) -> Result<SolveOutcome, InterpError> {
    let Some(pivot) = raw.pivot else {
        return Ok(SolveOutcome::NoSolution {
            witness: NoSolutionWitness::NoPivotDegree,
        });
    };
    for (i, node) in p.nodes.iter().enumerate() {
        if pivot.den.eval(&node.x).is_zero() {
            return Ok(SolveOutcome::NoSolution {
                witness: NoSolutionWitness::DenominatorVanishes { node_index: i },
            });
        }
    }
    let (num, den) = normalize_canonical(&pivot.num, &pivot.den)?;
    Ok(SolveOutcome::Solution {
        num,
        den,
        pivot_d: pivot.d,
        method,
    })
}

/// One interpolation strategy.
pub trait Solver: Send + Sync {
    /// Which method this is.
    fn method(&self) -> Method;

    /// Whether the strategy applies to the problem at all.
    fn supports(&self, p: &InterpolationProblem) -> bool {
        let _ = p;
        true
    }

    /// The raw pivot search, before outcome classification. Callers must
    /// rule out the all-zero data case first.
    fn raw_solve(&self, p: &InterpolationProblem) -> Result<RawSolve, InterpError>;

    /// Full solve: zero data short-circuits to [`SolveOutcome::ZeroFunction`]
    /// before any algebra runs, then the raw answer is classified.
    fn solve(&self, p: &InterpolationProblem) -> Result<SolveOutcome, InterpError> {
        if !self.supports(p) {
            return Err(InterpError::Unsupported {
                method: self.method().as_str(),
                reason: "a node has multiplicity above 1".to_owned(),
            });
        }
        if p.all_values_zero() {
            return Ok(SolveOutcome::ZeroFunction);
        }
        classify(p, self.raw_solve(p)?, self.method())
    }
}

/// Subresultant-table strategy; the engine computing the table is pluggable.
pub struct SubresultantSolver {
    engine: Arc<dyn SubresEngine>,
}

impl SubresultantSolver {
    /// Use the given table engine.
    pub fn with_engine(engine: Arc<dyn SubresEngine>) -> SubresultantSolver {
        SubresultantSolver { engine }
    }
}

impl Default for SubresultantSolver {
    /// The remainder-sequence engine is the fast default; the determinant
    /// engine stays available for cross-validation.
    fn default() -> SubresultantSolver {
        SubresultantSolver {
            engine: Arc::new(PrsEngine),
        }
    }
}

impl Solver for SubresultantSolver {
    fn method(&self) -> Method {
        Method::Subresultant
    }

    fn raw_solve(&self, p: &InterpolationProblem) -> Result<RawSolve, InterpError> {
        let f = p.node_poly()?;
        let g = hermite_interpolant(p)?;
        let table = self.engine.table(&f, &g)?;
        let pivot = find_pivot_degree(&table, p.num_degree).map(|d| RawPivot {
            d,
            num: table[d].sres.clone(),
            den: table[d].cof_g.clone(),
        });
        Ok(RawSolve { pivot })
    }
}

/// Sylvester single-sum strategy (multiplicity-free problems only).
#[derive(Debug, Default, Clone, Copy)]
pub struct SylvesterSolver;

/// The single-sum numerator for index `d`: sum over all `d`-subsets `S` of
/// the nodes of `prod_{s in S} (x - x_s)` times the product of the values at
/// the complement, divided by `prod_{u notin S, s in S} (x_u - x_s)`.
pub fn sylvester_numerator(
    p: &InterpolationProblem,
    d: usize,
) -> Result<Polynomial, InterpError> {
    require_multiplicity_free(p, Method::Sylvester)?;
    let spec = p.field.clone();
    let xs: Vec<FieldElement> = p.nodes.iter().map(|n| n.x.clone()).collect();
    let ys: Vec<FieldElement> = p.nodes.iter().map(|n| n.values[0].clone()).collect();
    let mut acc = Polynomial::zero(&spec);
    for subset in (0..xs.len()).combinations(d) {
        let in_subset = |i: usize| subset.binary_search(&i).is_ok();
        let mut term = Polynomial::one(&spec);
        for &s in &subset {
            let linear = Polynomial::new(spec.clone(), vec![-&xs[s], spec.one()]);
            term = &term * &linear;
        }
        let mut coeff = spec.one();
        for i in (0..xs.len()).filter(|&i| !in_subset(i)) {
            coeff = &coeff * &ys[i];
        }
        if coeff.is_zero() {
            continue;
        }
        let mut denom = spec.one();
        for u in (0..xs.len()).filter(|&i| !in_subset(i)) {
            for &s in &subset {
                denom = &denom * &(&xs[u] - &xs[s]);
            }
        }
        acc = &acc + &term.scale(&coeff.div(&denom).expect("distinct nodes"));
    }
    Ok(acc)
}

/// The single-sum denominator for index `d`: sum over all `(ell-d)`-subsets
/// `T` of `prod_{t in T} (x_t - x)` times the product of the values on `T`,
/// divided by `prod_{t in T, u notin T} (x_t - x_u)`.
pub fn sylvester_denominator(
    p: &InterpolationProblem,
    d: usize,
) -> Result<Polynomial, InterpError> {
    require_multiplicity_free(p, Method::Sylvester)?;
    let spec = p.field.clone();
    let xs: Vec<FieldElement> = p.nodes.iter().map(|n| n.x.clone()).collect();
    let ys: Vec<FieldElement> = p.nodes.iter().map(|n| n.values[0].clone()).collect();
    let size = p.ell() - d;
    let mut acc = Polynomial::zero(&spec);
    for subset in (0..xs.len()).combinations(size) {
        let in_subset = |i: usize| subset.binary_search(&i).is_ok();
        let mut term = Polynomial::one(&spec);
        let mut coeff = spec.one();
        for &t in &subset {
            // Factor (x_t - x).
            let linear = Polynomial::new(spec.clone(), vec![xs[t].clone(), -&spec.one()]);
            term = &term * &linear;
            coeff = &coeff * &ys[t];
        }
        if coeff.is_zero() {
            continue;
        }
        let mut denom = spec.one();
        for &t in &subset {
            for u in (0..xs.len()).filter(|&i| !in_subset(i)) {
                denom = &denom * &(&xs[t] - &xs[u]);
            }
        }
        acc = &acc + &term.scale(&coeff.div(&denom).expect("distinct nodes"));
    }
    Ok(acc)
}

fn require_multiplicity_free(
    p: &InterpolationProblem,
    method: Method,
) -> Result<(), InterpError> {
    if p.is_multiplicity_free() {
        Ok(())
    } else {
        Err(InterpError::Unsupported {
            method: method.as_str(),
            reason: "a node has multiplicity above 1".to_owned(),
        })
    }
}

impl Solver for SylvesterSolver {
    fn method(&self) -> Method {
        Method::Sylvester
    }

    fn supports(&self, p: &InterpolationProblem) -> bool {
        p.is_multiplicity_free()
    }

    fn raw_solve(&self, p: &InterpolationProblem) -> Result<RawSolve, InterpError> {
        require_multiplicity_free(p, Method::Sylvester)?;
        for d in (0..=p.num_degree.min(p.ell())).rev() {
            let num = sylvester_numerator(p, d)?;
            if num.is_zero() {
                continue;
            }
            let den = sylvester_denominator(p, d)?;
            return Ok(RawSolve {
                pivot: Some(RawPivot { d, num, den }),
            });
        }
        Ok(RawSolve { pivot: None })
    }
}

/// Bordered-determinant strategy.
#[derive(Debug, Default, Clone, Copy)]
pub struct DeterminantalSolver;

fn bordered_body(p: &InterpolationProblem, d: usize) -> Result<Matrix, InterpError> {
    let ell = p.ell();
    let v = build_confluent_vandermonde(&p.field, &p.node_pairs(), d)?;
    let u = build_data_matrix(&p.field, &p.node_points(), ell - d)?;
    Ok(v.vstack(&u)?)
}

/// The numerator for index `d` as a bordered determinant: monomial border
/// `1..x^d` on the Vandermonde block, zero border on the data block, with an
/// overall minus sign.
pub fn determinantal_numerator(
    p: &InterpolationProblem,
    d: usize,
) -> Result<Polynomial, InterpError> {
    let spec = p.field.clone();
    let ell = p.ell();
    let body = bordered_body(p, d)?;
    let mut border: Vec<Polynomial> = (0..=d).map(|k| Polynomial::monomial(&spec, k)).collect();
    border.extend((0..=ell - d).map(|_| Polynomial::zero(&spec)));
    let det = BorderedMatrix::new(body, border)?.det()?;
    Ok(-&det)
}

/// The denominator for index `d` as a bordered determinant: zero border on
/// the Vandermonde block, monomial border `1..x^{ell-d}` on the data block.
pub fn determinantal_denominator(
    p: &InterpolationProblem,
    d: usize,
) -> Result<Polynomial, InterpError> {
    let spec = p.field.clone();
    let ell = p.ell();
    let body = bordered_body(p, d)?;
    let mut border: Vec<Polynomial> = (0..=d).map(|_| Polynomial::zero(&spec)).collect();
    border.extend((0..=ell - d).map(|k| Polynomial::monomial(&spec, k)));
    Ok(BorderedMatrix::new(body, border)?.det()?)
}

impl Solver for DeterminantalSolver {
    fn method(&self) -> Method {
        Method::Determinantal
    }

    fn raw_solve(&self, p: &InterpolationProblem) -> Result<RawSolve, InterpError> {
        for d in (0..=p.num_degree.min(p.ell())).rev() {
            let num = determinantal_numerator(p, d)?;
            if num.is_zero() {
                continue;
            }
            let den = determinantal_denominator(p, d)?;
            return Ok(RawSolve {
                pivot: Some(RawPivot { d, num, den }),
            });
        }
        Ok(RawSolve { pivot: None })
    }
}

/// Registry of named solvers, selectable at run time.
pub struct SolverRegistry {
    entries: BTreeMap<&'static str, Arc<dyn Solver>>,
}

impl SolverRegistry {
    /// An empty registry.
    pub fn new() -> SolverRegistry {
        SolverRegistry {
            entries: BTreeMap::new(),
        }
    }

    /// The registry holding the three built-in strategies.
    pub fn with_builtins() -> SolverRegistry {
        let mut reg = SolverRegistry::new();
        reg.register(Arc::new(SubresultantSolver::default()));
        reg.register(Arc::new(SylvesterSolver));
        reg.register(Arc::new(DeterminantalSolver));
        reg
    }

    /// Add a solver under its method name.
    pub fn register(&mut self, solver: Arc<dyn Solver>) {
        self.entries.insert(solver.method().as_str(), solver);
    }

    /// Look a solver up by name.
    pub fn get(&self, name: &str) -> Result<Arc<dyn Solver>, InterpError> {
        self.entries
            .get(name)
            .cloned()
            .ok_or_else(|| InterpError::UnknownMethod(name.to_owned()))
    }

    /// The registered names, sorted.
    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }
}

impl Default for SolverRegistry {
    fn default() -> Self {
        SolverRegistry::with_builtins()
    }
}

/// Solve with the subresultant strategy (remainder-sequence engine).
pub fn solve_subresultant(p: &InterpolationProblem) -> Result<SolveOutcome, InterpError> {
    SubresultantSolver::default().solve(p)
}

/// Solve with the Sylvester single-sum strategy (multiplicity-free only).
pub fn solve_sylvester(p: &InterpolationProblem) -> Result<SolveOutcome, InterpError> {
    SylvesterSolver.solve(p)
}

/// Solve with the bordered-determinant strategy.
pub fn solve_determinantal(p: &InterpolationProblem) -> Result<SolveOutcome, InterpError> {
    DeterminantalSolver.solve(p)
}

/// Why verification failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    /// Numerator degree exceeds the cap.
    NumeratorDegree { got: Degree, cap: usize },
    /// Denominator degree exceeds the cap.
    DenominatorDegree { got: Degree, cap: usize },
    /// The denominator vanishes at the node with this index.
    DenominatorVanishesAt { node_index: usize },
    /// The Taylor data is not matched to the required order.
    TaylorMismatch,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::NumeratorDegree { got, cap } => {
                write!(f, "numerator degree {got} exceeds cap {cap}")
            }
            VerifyFailure::DenominatorDegree { got, cap } => {
                write!(f, "denominator degree {got} exceeds cap {cap}")
            }
            VerifyFailure::DenominatorVanishesAt { node_index } => {
                write!(f, "denominator vanishes at node index {node_index}")
            }
            VerifyFailure::TaylorMismatch => {
                f.write_str("Taylor data not matched to the required order")
            }
        }
    }
}

/// The result of verifying a candidate pair against a problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Whether every condition holds.
    pub pass: bool,
    /// The first failing condition, in check order.
    pub failure: Option<VerifyFailure>,
}

/// Check a candidate `(num, den)` against the problem: degree caps, the
/// denominator nonvanishing at every node, and divisibility of
/// `num - g * den` by the node polynomial (which encodes all Taylor
/// conditions at once, in any characteristic). Errors on a zero denominator.
pub fn verify_solution(
    p: &InterpolationProblem,
    num: &Polynomial,
    den: &Polynomial,
) -> Result<VerifyReport, InterpError> {
    if den.is_zero() {
        return Err(InterpError::ZeroDenominator);
    }
    let fail = |failure: VerifyFailure| {
        Ok(VerifyReport {
            pass: false,
            failure: Some(failure),
        })
    };
    if num.degree() > Degree::Finite(p.num_degree) {
        return fail(VerifyFailure::NumeratorDegree {
            got: num.degree(),
            cap: p.num_degree,
        });
    }
    if den.degree() > Degree::Finite(p.den_degree) {
        return fail(VerifyFailure::DenominatorDegree {
            got: den.degree(),
            cap: p.den_degree,
        });
    }
    for (i, node) in p.nodes.iter().enumerate() {
        if den.eval(&node.x).is_zero() {
            return fail(VerifyFailure::DenominatorVanishesAt { node_index: i });
        }
    }
    let g = hermite_interpolant(p)?;
    let f = p.node_poly()?;
    let residue = num - &(&g * den);
    if !f.divides(&residue)? {
        return fail(VerifyFailure::TaylorMismatch);
    }
    Ok(VerifyReport {
        pass: true,
        failure: None,
    })
}

/// Fault injection for the cross-check's negative-control tests: corrupt one
/// strategy's raw output and watch the report name the broken identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tamper {
    /// Add 1 to the Sylvester numerator.
    SylvesterNumerator,
    /// Add 1 to the determinantal denominator.
    DeterminantalDenominator,
}

/// One line of a cross-check report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    /// Which identity was checked.
    pub name: &'static str,
    /// Whether it held.
    pub pass: bool,
    /// Values involved, for failure forensics.
    pub detail: String,
}

/// The full cross-check report for one problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    /// Each identity checked, in order.
    pub checks: Vec<CheckItem>,
}

impl CrossCheckReport {
    /// Whether every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Run every applicable strategy and assert the exact relations between
/// their outputs: equal pivot degrees, equal outcomes and canonical
/// solutions, coefficientwise equality of the Sylvester sums with the
/// subresultant row, the common-scalar relation for the determinantal pair,
/// and verification of the final answer.
pub fn cross_check(p: &InterpolationProblem) -> Result<CrossCheckReport, InterpError> {
    cross_check_with(p, None)
}

/// [`cross_check`] with optional fault injection (see [`Tamper`]).
pub fn cross_check_with(
    p: &InterpolationProblem,
    tamper: Option<Tamper>,
) -> Result<CrossCheckReport, InterpError> {
    let mut checks: Vec<CheckItem> = Vec::new();

    if p.all_values_zero() {
        let all_zero = [
            solve_subresultant(p)?,
            solve_determinantal(p)?,
        ]
        .iter()
        .all(|o| *o == SolveOutcome::ZeroFunction);
        checks.push(CheckItem {
            name: "outcome-agreement",
            pass: all_zero,
            detail: "all strategies report the zero function".to_owned(),
        });
        return Ok(CrossCheckReport { checks });
    }

    let sub_solver = SubresultantSolver::default();
    let raw_sub = sub_solver.raw_solve(p)?;
    let mut raw_det = DeterminantalSolver.raw_solve(p)?;
    let mut raw_syl = if p.is_multiplicity_free() {
        Some(SylvesterSolver.raw_solve(p)?)
    } else {
        None
    };

    match tamper {
        Some(Tamper::SylvesterNumerator) => {
            if let Some(RawSolve { pivot: Some(rp) }) = raw_syl.as_mut() {
                rp.num = &rp.num + &Polynomial::one(&p.field);
            }
        }
        Some(Tamper::DeterminantalDenominator) => {
            if let Some(rp) = raw_det.pivot.as_mut() {
                rp.den = &rp.den + &Polynomial::one(&p.field);
            }
        }
        None => {}
    }

    let pivot_of = |raw: &RawSolve| raw.pivot.as_ref().map(|rp| rp.d);
    let pivots: Vec<(&str, Option<usize>)> = {
        let mut v = vec![
            ("subresultant", pivot_of(&raw_sub)),
            ("determinantal", pivot_of(&raw_det)),
        ];
        if let Some(rs) = &raw_syl {
            v.push(("sylvester", pivot_of(rs)));
        }
        v
    };
    let pivot_detail = pivots
        .iter()
        .map(|(name, d)| format!("{name}={d:?}"))
        .join(", ");
    checks.push(CheckItem {
        name: "pivot-agreement",
        pass: pivots.iter().map(|(_, d)| d).all_equal(),
        detail: pivot_detail,
    });

    // Outcome agreement, including witness kinds and canonical solutions.
    let out_sub = classify(p, raw_sub.clone(), Method::Subresultant)?;
    let out_det = classify(p, raw_det.clone(), Method::Determinantal)?;
    let mut outcomes = vec![("subresultant", out_sub.clone()), ("determinantal", out_det)];
    if let Some(rs) = &raw_syl {
        outcomes.push(("sylvester", classify(p, rs.clone(), Method::Sylvester)?));
    }
    let strip = |o: &SolveOutcome| match o {
        SolveOutcome::ZeroFunction => SolveOutcome::ZeroFunction,
        SolveOutcome::NoSolution { witness } => SolveOutcome::NoSolution { witness: *witness },
        SolveOutcome::Solution {
            num, den, pivot_d, ..
        } => SolveOutcome::Solution {
            num: num.clone(),
            den: den.clone(),
            pivot_d: *pivot_d,
            method: Method::Subresultant, // normalized out of the comparison
        },
    };
    checks.push(CheckItem {
        name: "outcome-agreement",
        pass: outcomes.iter().map(|(_, o)| strip(o)).all_equal(),
        detail: outcomes
            .iter()
            .map(|(name, o)| format!("{name}: {}", outcome_summary(o)))
            .join("; "),
    });

    // Raw algebraic identities, when a common pivot exists.
    if let (Some(rp_sub), Some(rp_det)) = (&raw_sub.pivot, &raw_det.pivot) {
        if rp_sub.d == rp_det.d {
            let ell = p.ell();
            let v_full = build_confluent_vandermonde(&p.field, &p.node_pairs(), ell)?;
            let det_v = v_full.det()?;
            let scale = if (ell - rp_sub.d) % 2 == 0 {
                det_v.clone()
            } else {
                -&det_v
            };
            let num_ok = rp_det.num == rp_sub.num.scale(&scale);
            let den_ok = rp_det.den == rp_sub.den.scale(&scale);
            checks.push(CheckItem {
                name: "determinantal-scaling",
                pass: num_ok && den_ok,
                detail: format!(
                    "scale=(-1)^(ell-d)*det(V)={}; num {}; den {}",
                    scale.to_text(),
                    if num_ok { "matches" } else { "differs" },
                    if den_ok { "matches" } else { "differs" },
                ),
            });
        }
    }
    if let Some(RawSolve {
        pivot: Some(rp_syl),
    }) = &raw_syl
    {
        if let Some(rp_sub) = &raw_sub.pivot {
            if rp_sub.d == rp_syl.d {
                let num_ok = rp_syl.num == rp_sub.num;
                let den_ok = rp_syl.den == rp_sub.den;
                checks.push(CheckItem {
                    name: "sylvester-exactness",
                    pass: num_ok && den_ok,
                    detail: format!(
                        "num {} ({} vs {}); den {} ({} vs {})",
                        if num_ok { "matches" } else { "differs" },
                        rp_syl.num,
                        rp_sub.num,
                        if den_ok { "matches" } else { "differs" },
                        rp_syl.den,
                        rp_sub.den,
                    ),
                });
            }
        }
    }

    // The final outcome, when a solution, must verify against the problem.
    if let SolveOutcome::Solution { num, den, .. } = &out_sub {
        let report = verify_solution(p, num, den)?;
        checks.push(CheckItem {
            name: "verification",
            pass: report.pass,
            detail: match &report.failure {
                None => "solution satisfies all interpolation conditions".to_owned(),
                Some(f) => f.to_string(),
            },
        });
    }

    Ok(CrossCheckReport { checks })
}

fn outcome_summary(o: &SolveOutcome) -> String {
    match o {
        SolveOutcome::ZeroFunction => "zero function".to_owned(),
        SolveOutcome::Solution {
            num, den, pivot_d, ..
        } => format!("solution d={pivot_d}: ({num}) / ({den})"),
        SolveOutcome::NoSolution { witness } => match witness {
            NoSolutionWitness::NoPivotDegree => "no solution: no pivot degree".to_owned(),
            NoSolutionWitness::DenominatorVanishes { node_index } => {
                format!("no solution: denominator vanishes at node {node_index}")
            }
        },
    }
}
