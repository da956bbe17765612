//! Random instance generation for stress testing and the cross-validation
//! command.
//!
//! Two kinds of instances are produced: *planted* instances start from a
//! known reduced rational function and derive the Taylor data from it, so the
//! solver's answer can be compared against the plant; *random-data* instances
//! draw the values uniformly and exercise the unsolvable paths as well.

use num_bigint::RandBigInt;
use num_traits::ToPrimitive;
use rand::Rng;
use thiserror::Error;

use crate::field::{FieldElement, FieldKind, FieldSpec};
use crate::interp::{InterpError, InterpolationProblem, ProblemNode};
use crate::poly::{Degree, Polynomial};

/// Errors raised by the generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    /// The field has too few elements for the requested node count.
    #[error("the field has fewer than {needed} distinct elements")]
    FieldTooSmall { needed: usize },
    /// Retry budget exhausted while enforcing side conditions.
    #[error("gave up after {0} attempts to satisfy the side conditions")]
    Exhausted(usize),
    #[error(transparent)]
    Interp(#[from] InterpError),
}

/// Size knobs for generated instances.
#[derive(Debug, Clone, Copy)]
pub struct GenParams {
    /// Upper bound on `ell = num_degree + den_degree`.
    pub max_ell: usize,
    /// Upper bound on any node multiplicity (1 = multiplicity-free).
    pub max_mult: usize,
    /// Magnitude bound for rational coefficients; ignored over prime fields.
    pub coeff_bound: i64,
}

impl Default for GenParams {
    fn default() -> GenParams {
        GenParams {
            max_ell: 6,
            max_mult: 3,
            coeff_bound: 9,
        }
    }
}

/// A uniform-ish field element: over the rationals, a fraction with small
/// numerator and denominator; over a prime field, a uniform residue.
pub fn random_element<R: Rng>(rng: &mut R, spec: &FieldSpec, bound: i64) -> FieldElement {
    match spec.kind() {
        FieldKind::Rational => {
            let num = rng.gen_range(-bound..=bound);
            let den = rng.gen_range(1..=3i64);
            spec.from_i64(num)
                .div(&spec.from_i64(den))
                .expect("denominator is nonzero")
        }
        FieldKind::Prime => {
            let p = spec.modulus().expect("prime field has a modulus");
            spec.from_biguint(&rng.gen_biguint_below(p))
        }
    }
}

/// A nonzero random element.
pub fn random_nonzero_element<R: Rng>(
    rng: &mut R,
    spec: &FieldSpec,
    bound: i64,
) -> FieldElement {
    loop {
        let x = random_element(rng, spec, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `count` pairwise distinct elements. Over the rationals these are small
/// integers so that printed instances stay readable.
pub fn distinct_elements<R: Rng>(
    rng: &mut R,
    spec: &FieldSpec,
    count: usize,
    bound: i64,
) -> Result<Vec<FieldElement>, GenError> {
    if let Some(p) = spec.modulus() {
        if p.to_usize().map(|p| p < count).unwrap_or(false) {
            return Err(GenError::FieldTooSmall { needed: count });
        }
    }
    if spec.kind() == FieldKind::Rational && (2 * bound + 1) < count as i64 {
        return Err(GenError::FieldTooSmall { needed: count });
    }
    let mut out: Vec<FieldElement> = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 200 * count + 200 {
            return Err(GenError::Exhausted(attempts));
        }
        let x = match spec.kind() {
            FieldKind::Rational => spec.from_i64(rng.gen_range(-bound..=bound)),
            FieldKind::Prime => {
                let p = spec.modulus().expect("prime field has a modulus");
                spec.from_biguint(&rng.gen_biguint_below(p))
            }
        };
        if !out.contains(&x) {
            out.push(x);
        }
    }
    Ok(out)
}

/// A random polynomial of degree at most `max_deg` (possibly zero).
pub fn random_poly<R: Rng>(
    rng: &mut R,
    spec: &FieldSpec,
    max_deg: usize,
    bound: i64,
) -> Polynomial {
    let coeffs = (0..=max_deg)
        .map(|_| random_element(rng, spec, bound))
        .collect();
    Polynomial::new(spec.clone(), coeffs)
}

/// A random monic polynomial of degree exactly `deg`.
pub fn random_monic<R: Rng>(
    rng: &mut R,
    spec: &FieldSpec,
    deg: usize,
    bound: i64,
) -> Polynomial {
    let mut coeffs: Vec<FieldElement> = (0..deg)
        .map(|_| random_element(rng, spec, bound))
        .collect();
    coeffs.push(spec.one());
    Polynomial::new(spec.clone(), coeffs)
}

/// The first `count` Taylor coefficients of `num/den` at `x`, computed by
/// shifting both polynomials to the origin and dividing the power series.
/// Errors if `den` vanishes at `x`.
pub fn taylor_values(
    num: &Polynomial,
    den: &Polynomial,
    x: &FieldElement,
    count: usize,
) -> Result<Vec<FieldElement>, InterpError> {
    let a = num.taylor_shift(x);
    let b = den.taylor_shift(x);
    let b0 = b.coeff(0);
    let b0_inv = b0.inv().map_err(|_| InterpError::ZeroDenominator)?;
    let mut out: Vec<FieldElement> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = a.coeff(k);
        for j in 1..=k {
            acc = &acc - &(&b.coeff(j) * &out[k - j]);
        }
        out.push(&acc * &b0_inv);
    }
    Ok(out)
}

/// A random split of `total` into parts between 1 and `max_mult`.
fn random_multiplicities<R: Rng>(rng: &mut R, total: usize, max_mult: usize) -> Vec<usize> {
    let cap = max_mult.max(1);
    let mut parts = Vec::new();
    let mut remaining = total;
    while remaining > 0 {
        let part = rng.gen_range(1..=cap.min(remaining));
        parts.push(part);
        remaining -= part;
    }
    parts
}

/// A problem with a known answer: picks a reduced pair `(A, B)` with `A`
/// monic, `gcd(A, B) = 1`, and `B` nonzero at every node, then derives the
/// Taylor data from `A/B`. Returns the problem together with the plant,
/// which is exactly the canonical solution the solvers must recover.
pub fn planted_instance<R: Rng>(
    rng: &mut R,
    spec: &FieldSpec,
    params: &GenParams,
) -> Result<(InterpolationProblem, Polynomial, Polynomial), GenError> {
    let ell = rng.gen_range(1..=params.max_ell.max(1));
    let a = rng.gen_range(0..=ell);
    let b = ell - a;
    let mults = random_multiplicities(rng, ell + 1, params.max_mult);
    let xs = distinct_elements(rng, spec, mults.len(), params.coeff_bound.max(8))?;

    let mut attempts = 0usize;
    loop {
        attempts += 1;
        if attempts > 500 {
            return Err(GenError::Exhausted(attempts));
        }
        let num_deg = rng.gen_range(0..=a);
        let num = random_monic(rng, spec, num_deg, params.coeff_bound);
        let den_deg = rng.gen_range(0..=b);
        let mut den = random_poly(rng, spec, den_deg, params.coeff_bound);
        if den.is_zero() {
            den = Polynomial::one(spec);
        }
        if xs.iter().any(|x| den.eval(x).is_zero()) {
            continue;
        }
        if num.gcd_monic(&den).map(|g| g.degree()) != Ok(Degree::Finite(0)) {
            continue;
        }
        let mut nodes = Vec::with_capacity(xs.len());
        for (x, &m) in xs.iter().zip(&mults) {
            nodes.push(ProblemNode {
                x: x.clone(),
                values: taylor_values(&num, &den, x, m)?,
            });
        }
        let problem = InterpolationProblem::new(spec.clone(), a, b, nodes)?;
        return Ok((problem, num, den));
    }
}

/// A problem with random data values; solvable or not. Individual values are
/// zeroed with probability 1/3: uniform data is almost always solvable, and
/// zeros are what force the interesting failure modes (a numerator needing
/// more roots than its degree cap allows, or a denominator pinned to vanish
/// at a node).
pub fn random_data_instance<R: Rng>(
    rng: &mut R,
    spec: &FieldSpec,
    params: &GenParams,
) -> Result<InterpolationProblem, GenError> {
    let ell = rng.gen_range(1..=params.max_ell.max(1));
    let a = rng.gen_range(0..=ell);
    let b = ell - a;
    let mults = random_multiplicities(rng, ell + 1, params.max_mult);
    let xs = distinct_elements(rng, spec, mults.len(), params.coeff_bound.max(8))?;
    let nodes = xs
        .iter()
        .zip(&mults)
        .map(|(x, &m)| ProblemNode {
            x: x.clone(),
            values: (0..m)
                .map(|_| {
                    if rng.gen_ratio(1, 3) {
                        spec.zero()
                    } else {
                        random_element(rng, spec, params.coeff_bound)
                    }
                })
                .collect(),
        })
        .collect();
    Ok(InterpolationProblem::new(spec.clone(), a, b, nodes)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::{cross_check, solve_subresultant, verify_solution, SolveOutcome};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn taylor_values_match_known_expansion() {
        // (x^2 - (7/5)x) / (-(1/5)x^2 + x - 1) reproduces the quintic
        // example's data at nodes 1 and 2.
        let spec = FieldSpec::rational();
        let num = Polynomial::new(
            spec.clone(),
            vec![spec.zero(), spec.parse("-7/5").unwrap(), spec.one()],
        );
        let den = Polynomial::new(
            spec.clone(),
            vec![
                spec.from_i64(-1),
                spec.one(),
                spec.parse("-1/5").unwrap(),
            ],
        );
        let at1 = taylor_values(&num, &den, &spec.from_i64(1), 2).unwrap();
        assert_eq!(at1, vec![spec.from_i64(2), spec.from_i64(3)]);
        let at2 = taylor_values(&num, &den, &spec.from_i64(2), 3).unwrap();
        assert_eq!(at2, vec![spec.from_i64(6), spec.from_i64(7), spec.from_i64(4)]);
    }

    #[test]
    fn taylor_values_reject_vanishing_denominator() {
        let spec = FieldSpec::rational();
        let num = Polynomial::one(&spec);
        let den = Polynomial::from_int_coeffs(&spec, &[0, 1]);
        assert!(taylor_values(&num, &den, &spec.zero(), 1).is_err());
    }

    #[test]
    fn planted_instances_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in [FieldSpec::rational(), FieldSpec::prime_u64(101).unwrap()] {
            for _ in 0..12 {
                let (problem, num, den) =
                    planted_instance(&mut rng, &spec, &GenParams::default()).unwrap();
                match solve_subresultant(&problem).unwrap() {
                    SolveOutcome::Solution {
                        num: got_num,
                        den: got_den,
                        ..
                    } => {
                        assert_eq!(got_num, num);
                        assert_eq!(got_den, den);
                    }
                    other => panic!("planted instance not recovered: {other:?}"),
                }
                assert!(verify_solution(&problem, &num, &den).unwrap().pass);
            }
        }
    }

    #[test]
    fn random_data_instances_cross_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let spec = FieldSpec::prime_u64(13).unwrap();
        for _ in 0..10 {
            let problem = random_data_instance(
                &mut rng,
                &spec,
                &GenParams {
                    max_ell: 4,
                    max_mult: 2,
                    coeff_bound: 9,
                },
            )
            .unwrap();
            let report = cross_check(&problem).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn small_field_node_budget_is_checked() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let spec = FieldSpec::prime_u64(3).unwrap();
        let err = distinct_elements(&mut rng, &spec, 5, 9).unwrap_err();
        assert_eq!(err, GenError::FieldTooSmall { needed: 5 });
    }

    #[test]
    fn distinct_elements_are_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for spec in [FieldSpec::rational(), FieldSpec::prime_u64(11).unwrap()] {
            let xs = distinct_elements(&mut rng, &spec, 8, 9).unwrap();
            for (i, x) in xs.iter().enumerate() {
                assert!(!xs[..i].contains(x));
            }
        }
    }
}
