//! Exact scalar arithmetic over the rationals and over prime fields.
//!
//! A [`FieldSpec`] names a coefficient field: either `Q` (arbitrary-precision
//! rationals) or `GF(p)` for a prime modulus `p`. A [`FieldElement`] is an
//! immutable scalar tagged with the spec it belongs to, so elements of
//! different fields can never be combined silently. Rational values are kept
//! as reduced fractions with positive denominator; prime-field values are
//! residues in `[0, p)`. Every operation is exact.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Errors raised by scalar construction, parsing, and division.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    /// The requested prime-field modulus failed the primality test.
    #[error("modulus {0} is not prime")]
    CompositeModulus(BigUint),
    /// The text form of a scalar could not be understood.
    #[error("cannot parse {text:?} as a scalar: {reason}")]
    Parse { text: String, reason: String },
    /// A fraction literal like `1/2` was supplied for a prime field.
    #[error("fraction literal {0:?} is not valid in a prime field; give an integer residue")]
    FractionInPrimeField(String),
    /// Attempt to invert or divide by zero.
    #[error("division by zero")]
    DivisionByZero,
}

/// Which kind of field a [`FieldSpec`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    /// The rational numbers.
    Rational,
    /// Integers modulo a prime.
    Prime,
}

#[derive(Debug, PartialEq, Eq)]
struct SpecInner {
    kind: FieldKind,
    modulus: Option<BigUint>,
}

/// A handle naming a coefficient field. Cheap to clone; equality compares the
/// mathematical field (kind and modulus), not the handle identity.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<SpecInner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for FieldSpec {}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.modulus {
            None => write!(f, "Q"),
            Some(p) => write!(f, "GF({p})"),
        }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FieldSpec {
    /// The field of rational numbers.
    pub fn rational() -> FieldSpec {
        FieldSpec {
            inner: Arc::new(SpecInner {
                kind: FieldKind::Rational,
                modulus: None,
            }),
        }
    }

    /// The prime field `GF(modulus)`. The modulus is primality-checked:
    /// deterministic Miller-Rabin below `2^64`, 40 rounds above.
    pub fn prime(modulus: BigUint) -> Result<FieldSpec, FieldError> {
        if !is_prime(&modulus) {
            return Err(FieldError::CompositeModulus(modulus));
        }
        Ok(FieldSpec {
            inner: Arc::new(SpecInner {
                kind: FieldKind::Prime,
                modulus: Some(modulus),
            }),
        })
    }

    /// Convenience constructor for small prime moduli.
    pub fn prime_u64(modulus: u64) -> Result<FieldSpec, FieldError> {
        FieldSpec::prime(BigUint::from(modulus))
    }

    /// Which kind of field this is.
    pub fn kind(&self) -> FieldKind {
        self.inner.kind
    }

    /// The modulus for a prime field, `None` for the rationals.
    pub fn modulus(&self) -> Option<&BigUint> {
        self.inner.modulus.as_ref()
    }

    /// The additive identity.
    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    /// The multiplicative identity.
    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    /// Embed a machine integer.
    pub fn from_i64(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    /// Embed an arbitrary-precision integer.
    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        let value = match self.kind() {
            FieldKind::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldKind::Prime => {
                let p = BigInt::from(self.inner.modulus.clone().unwrap());
                let r = n.mod_floor(&p);
                Scalar::Residue(r.to_biguint().expect("mod_floor yields nonnegative"))
            }
        };
        FieldElement {
            spec: self.clone(),
            value,
        }
    }

    /// Embed an arbitrary-precision nonnegative integer.
    pub fn from_biguint(&self, n: &BigUint) -> FieldElement {
        self.from_bigint(&BigInt::from(n.clone()))
    }

    /// Parse the scalar text format: a signed decimal integer, or `p/q` over
    /// the rationals. Fractions are rejected for prime fields; integers are
    /// reduced into `[0, p)`.
    pub fn parse(&self, text: &str) -> Result<FieldElement, FieldError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(FieldError::Parse {
                text: text.to_owned(),
                reason: "empty string".to_owned(),
            });
        }
        if let Some((num, den)) = trimmed.split_once('/') {
            if self.kind() == FieldKind::Prime {
                return Err(FieldError::FractionInPrimeField(text.to_owned()));
            }
            let num: BigInt = parse_int(num.trim(), text)?;
            let den: BigInt = parse_int(den.trim(), text)?;
            if den.is_zero() {
                return Err(FieldError::Parse {
                    text: text.to_owned(),
                    reason: "zero denominator".to_owned(),
                });
            }
            return Ok(FieldElement {
                spec: self.clone(),
                value: Scalar::Rational(BigRational::new(num, den)),
            });
        }
        let n: BigInt = parse_int(trimmed, text)?;
        Ok(self.from_bigint(&n))
    }

    /// `j!` as an element of this field (so it is zero in `GF(p)` once
    /// `j >= p`).
    pub fn factorial(&self, j: usize) -> FieldElement {
        let mut acc = self.one();
        for i in 1..=j {
            acc = &acc * &self.from_i64(i as i64);
        }
        acc
    }

    /// The binomial coefficient `C(n, k)` as an element of this field.
    pub fn binomial(&self, n: usize, k: usize) -> FieldElement {
        if k > n {
            return self.zero();
        }
        let b = num_integer::binomial(BigUint::from(n), BigUint::from(k));
        self.from_biguint(&b)
    }
}

fn parse_int(s: &str, original: &str) -> Result<BigInt, FieldError> {
    s.parse::<BigInt>().map_err(|e| FieldError::Parse {
        text: original.to_owned(),
        reason: e.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Scalar {
    Rational(BigRational),
    Residue(BigUint),
}

/// An exact scalar: a reduced rational or a prime-field residue, tagged with
/// its field. Mixing elements of different fields panics, as that is always a
/// programming error.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    value: Scalar,
}

impl FieldElement {
    /// The field this scalar belongs to.
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Whether this is the additive identity.
    pub fn is_zero(&self) -> bool {
        match &self.value {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(r) => r.is_zero(),
        }
    }

    /// Whether this is the multiplicative identity.
    pub fn is_one(&self) -> bool {
        match &self.value {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue(r) => r.is_one(),
        }
    }

    fn assert_same_spec(&self, other: &FieldElement) {
        assert_eq!(
            self.spec, other.spec,
            "cannot combine scalars from different fields"
        );
    }

    /// The multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let value = match &self.value {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue(r) => {
                let p = BigInt::from(self.spec.modulus().unwrap().clone());
                let a = BigInt::from(r.clone());
                let eg = a.extended_gcd(&p);
                debug_assert!(eg.gcd.is_one(), "residue is a unit modulo a prime");
                let inv = eg.x.mod_floor(&p);
                Scalar::Residue(inv.to_biguint().expect("mod_floor yields nonnegative"))
            }
        };
        Ok(FieldElement {
            spec: self.spec.clone(),
            value,
        })
    }

    /// Exact division. Errors when `rhs` is zero.
    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    /// Raise to a nonnegative integer power by repeated squaring.
    pub fn pow(&self, exp: usize) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The scalar text format: signed decimal integer, or `p/q` with positive
    /// `q` over the rationals.
    pub fn to_text(&self) -> String {
        match &self.value {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue(r) => r.to_string(),
        }
    }

    /// The value as a rational, if this is a rational-field scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue(_) => None,
        }
    }

    /// The value as a residue in `[0, p)`, if this is a prime-field scalar.
    pub fn as_residue(&self) -> Option<&BigUint> {
        match &self.value {
            Scalar::Rational(_) => None,
            Scalar::Residue(r) => Some(r),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.to_text(), self.spec)
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_spec(rhs);
        let value = match (&self.value, &rhs.value) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                Scalar::Residue((a + b) % self.spec.modulus().unwrap())
            }
            _ => unreachable!("spec equality guarantees matching representations"),
        };
        FieldElement {
            spec: self.spec.clone(),
            value,
        }
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_spec(rhs);
        let value = match (&self.value, &rhs.value) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                let p = self.spec.modulus().unwrap();
                Scalar::Residue(((a + p) - b) % p)
            }
            _ => unreachable!("spec equality guarantees matching representations"),
        };
        FieldElement {
            spec: self.spec.clone(),
            value,
        }
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_spec(rhs);
        let value = match (&self.value, &rhs.value) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue(a), Scalar::Residue(b)) => {
                Scalar::Residue((a * b) % self.spec.modulus().unwrap())
            }
            _ => unreachable!("spec equality guarantees matching representations"),
        };
        FieldElement {
            spec: self.spec.clone(),
            value,
        }
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        let value = match &self.value {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue(a) => {
                let p = self.spec.modulus().unwrap();
                Scalar::Residue((p - a) % p)
            }
        };
        FieldElement {
            spec: self.spec.clone(),
            value,
        }
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        &self + &rhs
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        &self - &rhs
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        &self * &rhs
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Deterministic witnesses sufficient for every modulus below `2^64`.
const DETERMINISTIC_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in SMALL_PRIMES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // n is odd and > 97 here. Write n - 1 = 2^s * d with d odd.
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n - 1 is nonzero");
    let d = &n_minus_1 >> s;

    let passes = |base: &BigUint| -> bool {
        let mut x = base.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            return true;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                return true;
            }
        }
        false
    };

    if n.bits() <= 64 {
        DETERMINISTIC_BASES
            .iter()
            .all(|b| passes(&BigUint::from(*b)))
    } else {
        // Probabilistic rounds with bases drawn from a generator seeded by the
        // modulus itself, so the answer is deterministic per input.
        let seed = n.iter_u64_digits().fold(0u64, |acc, d| acc ^ d);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lo = two.clone();
        let hi = n_minus_1.clone();
        (0..40).all(|_| {
            let base = rng.gen_biguint_range(&lo, &hi);
            passes(&base)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_u64(p).unwrap()
    }

    #[test]
    fn parse_rational_integer() {
        let q = FieldSpec::rational();
        assert_eq!(q.parse("-8").unwrap(), q.from_i64(-8));
    }

    #[test]
    fn parse_rational_fraction() {
        let q = FieldSpec::rational();
        let half = q.parse("1/2").unwrap();
        assert_eq!(half.to_text(), "1/2");
        assert_eq!(&half + &half, q.one());
        // Fractions come out reduced with positive denominator.
        assert_eq!(q.parse("2/-4").unwrap().to_text(), "-1/2");
    }

    #[test]
    fn parse_residue_reduces() {
        let f7 = gf(7);
        assert_eq!(f7.parse("16").unwrap(), f7.from_i64(2));
        assert_eq!(f7.parse("-1").unwrap(), f7.from_i64(6));
    }

    #[test]
    fn parse_rejects_garbage() {
        let q = FieldSpec::rational();
        assert!(matches!(q.parse("abc"), Err(FieldError::Parse { .. })));
        assert!(matches!(q.parse(""), Err(FieldError::Parse { .. })));
        assert!(matches!(q.parse("1/0"), Err(FieldError::Parse { .. })));
        let f7 = gf(7);
        assert!(matches!(
            f7.parse("1/2"),
            Err(FieldError::FractionInPrimeField(_))
        ));
    }

    #[test]
    fn inverse_examples() {
        let f7 = gf(7);
        assert_eq!(f7.from_i64(2).inv().unwrap(), f7.from_i64(4));
        let q = FieldSpec::rational();
        assert_eq!(q.parse("1/2").unwrap().inv().unwrap(), q.from_i64(2));
        assert_eq!(q.zero().inv(), Err(FieldError::DivisionByZero));
        assert_eq!(f7.zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn factorial_examples() {
        let q = FieldSpec::rational();
        assert_eq!(q.factorial(3), q.from_i64(6));
        assert_eq!(q.factorial(0), q.one());
        let f7 = gf(7);
        assert!(f7.factorial(7).is_zero());
        assert_eq!(f7.factorial(6), f7.from_i64(720 % 7));
    }

    #[test]
    fn binomial_matches_pascal() {
        let q = FieldSpec::rational();
        for n in 0..10usize {
            for k in 0..=n {
                let lhs = q.binomial(n, k);
                let rhs = if k == 0 || k == n {
                    q.one()
                } else {
                    &q.binomial(n - 1, k - 1) + &q.binomial(n - 1, k)
                };
                assert_eq!(lhs, rhs);
            }
        }
        assert!(q.binomial(3, 5).is_zero());
    }

    #[test]
    fn primality_accepts_primes() {
        for p in [2u64, 3, 7, 13, 101, 1_000_000_007, (1 << 61) - 1] {
            assert!(FieldSpec::prime_u64(p).is_ok(), "{p} should be prime");
        }
        // 2^127 - 1 is a Mersenne prime, exercising the wide path.
        let m127 = (BigUint::one() << 127) - 1u32;
        assert!(FieldSpec::prime(m127).is_ok());
    }

    #[test]
    fn primality_rejects_composites() {
        for n in [0u64, 1, 4, 100, 561, 6_700_417 * 3] {
            assert!(
                matches!(
                    FieldSpec::prime_u64(n),
                    Err(FieldError::CompositeModulus(_))
                ),
                "{n} should be rejected"
            );
        }
        // Product of two large primes, exercising the wide path.
        let a = (BigUint::one() << 127) - 1u32;
        let b = (BigUint::one() << 89) - 1u32;
        assert!(FieldSpec::prime(a * b).is_err());
    }

    fn random_element(rng: &mut impl Rng, spec: &FieldSpec) -> FieldElement {
        match spec.kind() {
            FieldKind::Rational => {
                let n = rng.gen_range(-50i64..=50);
                let d = rng.gen_range(1i64..=9);
                spec.parse(&format!("{n}/{d}")).unwrap()
            }
            FieldKind::Prime => {
                let p = spec.modulus().unwrap().to_u64_digits()[0];
                spec.from_i64(rng.gen_range(0..p) as i64)
            }
        }
    }

    #[test]
    fn field_axioms_hold_on_random_triples() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for spec in [FieldSpec::rational(), gf(7), gf(101)] {
            let trials = 1000 / 3 + 1;
            for _ in 0..trials {
                let a = random_element(&mut rng, &spec);
                let b = random_element(&mut rng, &spec);
                let c = random_element(&mut rng, &spec);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a + &b, &b + &a);
                assert_eq!(&a * &b, &b * &a);
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&a + &spec.zero(), a);
                assert_eq!(&a * &spec.one(), a);
                assert!((&a - &a).is_zero());
                if !a.is_zero() {
                    assert!((&a * &a.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in [FieldSpec::rational(), gf(13), gf(101)] {
            for _ in 0..200 {
                let a = random_element(&mut rng, &spec);
                assert_eq!(spec.parse(&a.to_text()).unwrap(), a);
            }
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let q = FieldSpec::rational();
        let x = q.parse("-3/2").unwrap();
        let mut acc = q.one();
        for e in 0..10 {
            assert_eq!(x.pow(e), acc);
            acc = &acc * &x;
        }
    }

    #[test]
    fn mixed_field_scalars_are_rejected() {
        let result = std::panic::catch_unwind(|| {
            let q = FieldSpec::rational();
            let f7 = gf(7);
            let _ = &q.one() + &f7.one();
        });
        assert!(result.is_err());
    }
}
