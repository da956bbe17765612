//! Exact rational interpolation with prescribed numerator and denominator
//! degrees, over the rationals or a prime field.
//!
//! Given nodes `x_0, ..., x_k` with multiplicities `a_0, ..., a_k` and Taylor
//! data at each node, the library finds — when one exists — a rational
//! function `A/B` with `deg A <= a`, `deg B <= b`, and prescribed Taylor
//! expansion to order `a_i` at each node (Cauchy interpolation when every
//! multiplicity is 1, osculatory/Hermite interpolation otherwise). Three
//! independent algorithms are provided and cross-validated:
//!
//! * subresultants of the node polynomial and the Hermite interpolant,
//!   computed either from determinants or from a polynomial remainder
//!   sequence ([`subres`]);
//! * Sylvester-style single sums over subsets of the nodes, for the
//!   multiplicity-free case ([`interp::solve_sylvester`]);
//! * bordered confluent-Vandermonde determinants ([`interp::solve_determinantal`]).
//!
//! All arithmetic is exact: results from different routes agree coefficient
//! for coefficient, and the test suite enforces that.

pub mod cli;
pub mod field;
pub mod gen;
pub mod interp;
pub mod linalg;
pub mod poly;
pub mod subres;

pub use field::{FieldElement, FieldError, FieldKind, FieldSpec};
pub use interp::{
    InterpError, InterpolationProblem, Method, NoSolutionWitness, ProblemNode, SolveOutcome,
    Solver, SolverRegistry, VerifyReport,
};
pub use linalg::{BorderedMatrix, LinalgError, Matrix};
pub use poly::{Degree, PolyError, Polynomial, RationalFunction};
