//! Dense univariate polynomials over an exact field, plus reduced rational
//! functions.
//!
//! Coefficients are stored in ascending order and kept canonical: no trailing
//! zero coefficients, so the zero polynomial has an empty coefficient vector.
//! The degree of the zero polynomial is the sentinel [`Degree::NegInf`],
//! ordered below every finite degree, never `-1` as an ordinary integer.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};

/// Errors raised by polynomial division, gcd, and root-product construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// Division (or divisibility test) by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// `gcd(0, 0)` is undefined.
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    /// A root was repeated in a product of distinct linear factors.
    #[error("repeated root {0}")]
    RepeatedRoot(String),
    /// A root was given multiplicity zero.
    #[error("root {0} has zero multiplicity")]
    ZeroMultiplicity(String),
    /// A rational function was built with a zero denominator.
    #[error("zero denominator polynomial")]
    ZeroDenominator,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The degree of a polynomial. `NegInf` (the degree of the zero polynomial)
/// sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    /// Degree of the zero polynomial.
    NegInf,
    /// An ordinary degree.
    Finite(usize),
}

impl Degree {
    /// The finite value, if any.
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A dense univariate polynomial with exact coefficients in ascending order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    spec: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(spec: FieldSpec, mut coeffs: Vec<FieldElement>) -> Polynomial {
        for c in &coeffs {
            assert_eq!(c.spec(), &spec, "coefficient from a different field");
        }
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Polynomial { spec, coeffs }
    }

    /// The zero polynomial.
    pub fn zero(spec: &FieldSpec) -> Polynomial {
        Polynomial {
            spec: spec.clone(),
            coeffs: Vec::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(spec: &FieldSpec) -> Polynomial {
        Polynomial::constant(spec.one())
    }

    /// A constant polynomial.
    pub fn constant(c: FieldElement) -> Polynomial {
        let spec = c.spec().clone();
        Polynomial::new(spec, vec![c])
    }

    /// The monomial `x^k`.
    pub fn monomial(spec: &FieldSpec, k: usize) -> Polynomial {
        let mut coeffs = vec![spec.zero(); k];
        coeffs.push(spec.one());
        Polynomial {
            spec: spec.clone(),
            coeffs,
        }
    }

    /// Convenience constructor from machine-integer coefficients (ascending).
    pub fn from_int_coeffs(spec: &FieldSpec, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(spec.clone(), coeffs.iter().map(|&c| spec.from_i64(c)).collect())
    }

    /// The coefficient field.
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Ascending coefficients with no trailing zeros.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// The coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.spec.zero())
    }

    /// The degree, with [`Degree::NegInf`] for the zero polynomial.
    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// The leading coefficient, `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Whether the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(FieldElement::is_one)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.spec.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// The `k`-th formal derivative.
    pub fn formal_derivative(&self, k: usize) -> Polynomial {
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.derivative_once();
        }
        cur
    }

    fn derivative_once(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(&self.spec);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.spec.from_i64(i as i64))
            .collect();
        Polynomial::new(self.spec.clone(), coeffs)
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::new(
            self.spec.clone(),
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.spec.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    /// Divide by the leading coefficient. Panics on the zero polynomial.
    pub fn make_monic(&self) -> Polynomial {
        let lc = self.leading_coeff().expect("make_monic of zero polynomial");
        let inv = lc.inv().expect("leading coefficient is nonzero");
        self.scale(&inv)
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and
    /// `deg remainder < deg divisor`. Errors when the divisor is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Polynomial::zero(&self.spec), self.clone()));
        }
        let lc_inv = divisor.coeffs[dd].inv().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.spec.zero(); self.coeffs.len() - dd];
        for k in (0..=self.coeffs.len() - 1 - dd).rev() {
            let factor = &rem[k + dd] * &lc_inv;
            if !factor.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(&factor * dc);
                }
            }
            quot[k] = factor;
        }
        rem.truncate(dd);
        Ok((
            Polynomial::new(self.spec.clone(), quot),
            Polynomial::new(self.spec.clone(), rem),
        ))
    }

    /// Whether `self` divides `dividend` exactly. Errors when `self` is zero.
    pub fn divides(&self, dividend: &Polynomial) -> Result<bool, PolyError> {
        let (_, r) = dividend.div_rem(self)?;
        Ok(r.is_zero())
    }

    /// The monic greatest common divisor. `gcd(p, 0)` is monic `p`; both
    /// arguments zero is an error.
    pub fn gcd_monic(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.make_monic())
    }

    /// The monic product `prod (x - root_i)^{mult_i}` over pairwise-distinct
    /// roots with positive multiplicities.
    pub fn from_roots(
        spec: &FieldSpec,
        roots: &[(FieldElement, usize)],
    ) -> Result<Polynomial, PolyError> {
        for (i, (r, m)) in roots.iter().enumerate() {
            if *m == 0 {
                return Err(PolyError::ZeroMultiplicity(r.to_text()));
            }
            for (s, _) in &roots[..i] {
                if s == r {
                    return Err(PolyError::RepeatedRoot(r.to_text()));
                }
            }
        }
        let mut acc = Polynomial::one(spec);
        for (r, m) in roots {
            let linear = Polynomial::new(spec.clone(), vec![-r, spec.one()]);
            for _ in 0..*m {
                acc = &acc * &linear;
            }
        }
        Ok(acc)
    }

    /// The composition `p(x + c)`, by Horner's rule on the shifted variable.
    pub fn taylor_shift(&self, c: &FieldElement) -> Polynomial {
        let linear = Polynomial::new(self.spec.clone(), vec![c.clone(), self.spec.one()]);
        let mut acc = Polynomial::zero(&self.spec);
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &linear) + &Polynomial::constant(coeff.clone());
        }
        acc
    }

    /// Render a human-readable form, highest power first. Only used for
    /// diagnostics; machine output always uses coefficient arrays.
    fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff_text = c.to_text();
            let (sign, magnitude) = match coeff_text.strip_prefix('-') {
                Some(rest) => ("-", rest.to_owned()),
                None => ("+", coeff_text),
            };
            let term = match i {
                0 => magnitude,
                _ => {
                    let power = if i == 1 { "x".to_owned() } else { format!("x^{i}") };
                    if magnitude == "1" {
                        power
                    } else if magnitude.contains('/') {
                        format!("({magnitude}){power}")
                    } else {
                        format!("{magnitude}{power}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if sign == "-" { format!("-{term}") } else { term });
            } else {
                parts.push(format!(" {} {}", if sign == "-" { "-" } else { "+" }, term));
            }
        }
        parts.concat()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.spec, rhs.spec, "polynomials from different fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Polynomial::new(self.spec.clone(), coeffs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.spec, rhs.spec, "polynomials from different fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Polynomial::new(self.spec.clone(), coeffs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.spec, rhs.spec, "polynomials from different fields");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.spec);
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(self.spec.clone(), coeffs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.spec.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

/// A rational function held in canonical form: denominator nonzero,
/// `gcd(num, den) = 1`, and the numerator monic — or zero, in which case the
/// denominator is 1. Equality of canonical forms is equality of rational
/// functions.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Canonicalize `num/den`: reduce by the monic gcd, then scale so the
    /// numerator is monic (or the pair is `(0, 1)`). Errors when `den` is
    /// zero.
    pub fn new(num: &Polynomial, den: &Polynomial) -> Result<RationalFunction, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        let spec = num.spec().clone();
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(&spec),
                den: Polynomial::one(&spec),
            });
        }
        let h = num.gcd_monic(den)?;
        let (num_red, r1) = num.div_rem(&h)?;
        debug_assert!(r1.is_zero());
        let (den_red, r2) = den.div_rem(&h)?;
        debug_assert!(r2.is_zero());
        let scale = num_red
            .leading_coeff()
            .expect("reduced numerator is nonzero")
            .inv()
            .expect("leading coefficient is nonzero");
        Ok(RationalFunction {
            num: num_red.scale(&scale),
            den: den_red.scale(&scale),
        })
    }

    /// The canonical numerator.
    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    /// The canonical denominator.
    pub fn den(&self) -> &Polynomial {
        &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_u64(p).unwrap()
    }

    #[test]
    fn canonical_trims_trailing_zeros() {
        let s = q();
        let p = Polynomial::from_int_coeffs(&s, &[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Degree::Finite(1));
        assert_eq!(Polynomial::from_int_coeffs(&s, &[0, 0]).degree(), Degree::NegInf);
    }

    #[test]
    fn degree_sentinel_orders_below_everything() {
        assert!(Degree::NegInf < Degree::Finite(0));
        assert!(Degree::Finite(0) < Degree::Finite(5));
    }

    #[test]
    fn eval_examples() {
        // x^5 + 2 at x = 1 over GF(7).
        let f7 = gf(7);
        let p = Polynomial::from_int_coeffs(&f7, &[2, 0, 0, 0, 0, 1]);
        assert_eq!(p.eval(&f7.from_i64(1)), f7.from_i64(3));
        // 25 - 25x + 5x^2 at x = 2 over Q.
        let s = q();
        let p = Polynomial::from_int_coeffs(&s, &[25, -25, 5]);
        assert_eq!(p.eval(&s.from_i64(2)), s.from_i64(-5));
    }

    #[test]
    fn derivative_example() {
        let s = q();
        let g = Polynomial::from_int_coeffs(&s, &[-8, 23, -20, 8, -1]);
        assert_eq!(
            g.formal_derivative(1),
            Polynomial::from_int_coeffs(&s, &[23, -40, 24, -4])
        );
        assert_eq!(g.formal_derivative(0), g);
        assert!(g.formal_derivative(5).is_zero());
    }

    #[test]
    fn div_rem_example() {
        let s = q();
        let f = Polynomial::from_int_coeffs(&s, &[-1, 0, 0, 0, 0, 0, 1]);
        let g = Polynomial::from_int_coeffs(&s, &[2, 0, 0, 0, 0, 1]);
        let (quot, rem) = f.div_rem(&g).unwrap();
        assert_eq!(quot, Polynomial::from_int_coeffs(&s, &[0, 1]));
        assert_eq!(rem, Polynomial::from_int_coeffs(&s, &[-1, -2]));
        assert!(matches!(
            f.div_rem(&Polynomial::zero(&s)),
            Err(PolyError::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_examples() {
        let s = q();
        let f = Polynomial::from_roots(&s, &[(s.from_i64(1), 2), (s.from_i64(2), 3)]).unwrap();
        let g = Polynomial::from_roots(&s, &[(s.from_i64(0), 1), (s.from_i64(1), 1)]).unwrap();
        assert_eq!(
            f.gcd_monic(&g).unwrap(),
            Polynomial::from_int_coeffs(&s, &[-1, 1])
        );
        // gcd(p, 0) is monic p.
        let p = Polynomial::from_int_coeffs(&s, &[2, 4]);
        assert_eq!(
            p.gcd_monic(&Polynomial::zero(&s)).unwrap(),
            Polynomial::from_int_coeffs(&s, &[1, 2]).scale(&s.parse("1/2").unwrap())
        );
        assert!(matches!(
            Polynomial::zero(&s).gcd_monic(&Polynomial::zero(&s)),
            Err(PolyError::GcdOfZeros)
        ));
    }

    #[test]
    fn from_roots_examples() {
        let s = q();
        let f = Polynomial::from_roots(&s, &[(s.from_i64(1), 2), (s.from_i64(2), 3)]).unwrap();
        assert_eq!(f, Polynomial::from_int_coeffs(&s, &[-8, 28, -38, 25, -8, 1]));

        // The six nonzero residues modulo 7 are the roots of x^6 - 1.
        let f7 = gf(7);
        let roots: Vec<_> = (1..=6).map(|i| (f7.from_i64(i), 1)).collect();
        let f = Polynomial::from_roots(&f7, &roots).unwrap();
        assert_eq!(f, Polynomial::from_int_coeffs(&f7, &[-1, 0, 0, 0, 0, 0, 1]));

        let dup = Polynomial::from_roots(&s, &[(s.from_i64(1), 1), (s.from_i64(1), 1)]);
        assert!(matches!(dup, Err(PolyError::RepeatedRoot(_))));
        let zero_mult = Polynomial::from_roots(&s, &[(s.from_i64(1), 0)]);
        assert!(matches!(zero_mult, Err(PolyError::ZeroMultiplicity(_))));
    }

    #[test]
    fn from_roots_vanishes_to_exact_order() {
        let s = q();
        let roots = [(s.from_i64(3), 2), (s.from_i64(-1), 3), (s.from_i64(0), 1)];
        let f = Polynomial::from_roots(&s, &roots).unwrap();
        assert!(f.is_monic());
        for (r, m) in &roots {
            // (x - r)^m divides f, (x - r)^{m+1} does not: characteristic-robust.
            let factor =
                Polynomial::from_roots(&s, &[(r.clone(), *m)]).unwrap();
            assert!(factor.divides(&f).unwrap());
            let bigger = Polynomial::from_roots(&s, &[(r.clone(), m + 1)]).unwrap();
            assert!(!bigger.divides(&f).unwrap());
        }
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let s = q();
        let p = Polynomial::from_int_coeffs(&s, &[3, -2, 0, 5]);
        let c = s.from_i64(4);
        let shifted = p.taylor_shift(&c);
        for x in -3..3 {
            let x = s.from_i64(x);
            assert_eq!(shifted.eval(&x), p.eval(&(&x + &c)));
        }
    }

    fn random_poly(rng: &mut impl Rng, spec: &FieldSpec, max_deg: usize) -> Polynomial {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs = (0..=deg)
            .map(|_| spec.from_i64(rng.gen_range(-9i64..=9)))
            .collect();
        Polynomial::new(spec.clone(), coeffs)
    }

    #[test]
    fn div_rem_identity_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for spec in [q(), gf(7), gf(101)] {
            for _ in 0..334 {
                let a = random_poly(&mut rng, &spec, 8);
                let b = random_poly(&mut rng, &spec, 5);
                if b.is_zero() {
                    continue;
                }
                let (quot, rem) = a.div_rem(&b).unwrap();
                assert_eq!(&(&quot * &b) + &rem, a);
                assert!(rem.degree() < b.degree());
            }
        }
    }

    #[test]
    fn gcd_divides_both_and_is_monic() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for spec in [q(), gf(101)] {
            for _ in 0..100 {
                let a = random_poly(&mut rng, &spec, 6);
                let b = random_poly(&mut rng, &spec, 6);
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                let g = a.gcd_monic(&b).unwrap();
                assert!(g.is_monic());
                if !a.is_zero() {
                    assert!(g.divides(&a).unwrap());
                }
                if !b.is_zero() {
                    assert!(g.divides(&b).unwrap());
                }
            }
        }
    }

    #[test]
    fn rational_function_canonical_form() {
        let s = q();
        // (8 + 16x) / 8x canonicalizes to (x + 1/2) / (x/2).
        let num = Polynomial::from_int_coeffs(&s, &[8, 16]);
        let den = Polynomial::from_int_coeffs(&s, &[0, 8]);
        let rf = RationalFunction::new(&num, &den).unwrap();
        assert!(rf.num().is_monic());
        let num2 = Polynomial::from_int_coeffs(&s, &[1, 2]);
        let den2 = Polynomial::from_int_coeffs(&s, &[0, 1]);
        assert_eq!(rf, RationalFunction::new(&num2, &den2).unwrap());

        // Zero numerator normalizes the denominator to 1.
        let rf0 = RationalFunction::new(&Polynomial::zero(&s), &den).unwrap();
        assert!(rf0.num().is_zero());
        assert_eq!(rf0.den(), &Polynomial::one(&s));

        assert!(matches!(
            RationalFunction::new(&num, &Polynomial::zero(&s)),
            Err(PolyError::ZeroDenominator)
        ));
    }

    #[test]
    fn display_forms() {
        let s = q();
        let p = Polynomial::from_int_coeffs(&s, &[-8, 0, 25, -1]);
        assert_eq!(p.to_string(), "-x^3 + 25x^2 - 8");
        assert_eq!(Polynomial::zero(&s).to_string(), "0");
        let withfrac = Polynomial::new(s.clone(), vec![s.parse("7/5").unwrap(), s.one()]);
        assert_eq!(withfrac.to_string(), "x + 7/5");
    }

    proptest! {
        #[test]
        fn add_then_subtract_round_trips(a in prop::collection::vec(-20i64..20, 0..8),
                                         b in prop::collection::vec(-20i64..20, 0..8)) {
            let s = q();
            let pa = Polynomial::from_int_coeffs(&s, &a);
            let pb = Polynomial::from_int_coeffs(&s, &b);
            prop_assert_eq!(&(&pa + &pb) - &pb, pa);
        }

        #[test]
        fn mul_degree_adds(a in prop::collection::vec(-20i64..20, 1..8),
                           b in prop::collection::vec(-20i64..20, 1..8)) {
            let s = q();
            let pa = Polynomial::from_int_coeffs(&s, &a);
            let pb = Polynomial::from_int_coeffs(&s, &b);
            let prod = &pa * &pb;
            match (pa.degree().finite(), pb.degree().finite()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Degree::Finite(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn eval_is_ring_homomorphism(a in prop::collection::vec(-9i64..9, 0..6),
                                     b in prop::collection::vec(-9i64..9, 0..6),
                                     x in -10i64..10) {
            let s = q();
            let pa = Polynomial::from_int_coeffs(&s, &a);
            let pb = Polynomial::from_int_coeffs(&s, &b);
            let x = s.from_i64(x);
            prop_assert_eq!((&pa + &pb).eval(&x), &pa.eval(&x) + &pb.eval(&x));
            prop_assert_eq!((&pa * &pb).eval(&x), &pa.eval(&x) * &pb.eval(&x));
        }
    }
}
