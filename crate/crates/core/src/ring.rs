//! Exact coefficient domains: the rationals, the integers, and prime fields.
//!
//! Everything downstream works over one of these three domains. Values are
//! arbitrary precision (`num-bigint` / `num-rational`) and always kept in
//! canonical form: rationals reduced with positive denominator, prime-field
//! values in `[0, p-1]`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Errors from domain construction and residue operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operation requires the {expected} domain, got {found}")]
    DomainMismatch {
        expected: DomainDescriptor,
        found: DomainDescriptor,
    },
    #[error("residue level d must be at least 1")]
    InvalidLevel,
    #[error("{num}/{den} is not an element of {domain}")]
    NotInDomain {
        num: BigInt,
        den: BigInt,
        domain: DomainDescriptor,
    },
}

/// One of the three supported coefficient domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainDescriptor {
    Rationals,
    Integers,
    PrimeField(u64),
}

impl DomainDescriptor {
    /// Prime field of order `p`; fails unless `p` is prime.
    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        if is_prime_u64(p) {
            Ok(DomainDescriptor::PrimeField(p))
        } else {
            Err(RingError::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, DomainDescriptor::Integers)
    }

    pub fn zero(&self) -> Coefficient {
        self.integer(0)
    }

    pub fn one(&self) -> Coefficient {
        self.integer(1)
    }

    /// Canonical image of a small integer in this domain.
    pub fn integer(&self, n: i64) -> Coefficient {
        self.from_bigint(BigInt::from(n))
    }

    /// Canonical image of an arbitrary-precision integer in this domain.
    pub fn from_bigint(&self, n: BigInt) -> Coefficient {
        match self {
            DomainDescriptor::Rationals => Coefficient::Rational(BigRational::from_integer(n)),
            DomainDescriptor::Integers => Coefficient::Integer(n),
            DomainDescriptor::PrimeField(p) => {
                let m = BigInt::from(*p);
                let r = n.mod_floor(&m);
                let (_, digits) = r.to_u64_digits();
                Coefficient::PrimeField {
                    p: *p,
                    value: digits.first().copied().unwrap_or(0),
                }
            }
        }
    }

    /// Image of a fraction `num/den`. Over the integers the fraction must be
    /// integral; over a prime field `den` must be a unit.
    pub fn ratio(&self, num: BigInt, den: BigInt) -> Result<Coefficient, RingError> {
        if den.is_zero() {
            return Err(RingError::NotInDomain {
                num,
                den,
                domain: *self,
            });
        }
        match self {
            DomainDescriptor::Rationals => Ok(Coefficient::Rational(BigRational::new(num, den))),
            DomainDescriptor::Integers => {
                let (q, r) = num.div_rem(&den);
                if r.is_zero() {
                    Ok(Coefficient::Integer(q))
                } else {
                    Err(RingError::NotInDomain {
                        num,
                        den,
                        domain: *self,
                    })
                }
            }
            DomainDescriptor::PrimeField(_) => {
                let d = self.from_bigint(den.clone());
                match d.inverse() {
                    Some(inv) => Ok(self.from_bigint(num).mul(&inv)),
                    None => Err(RingError::NotInDomain {
                        num,
                        den,
                        domain: *self,
                    }),
                }
            }
        }
    }
}

impl fmt::Display for DomainDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainDescriptor::Rationals => write!(f, "QQ"),
            DomainDescriptor::Integers => write!(f, "ZZ"),
            DomainDescriptor::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact element of one of the three domains.
///
/// Arithmetic between coefficients of different domains is a programming
/// error and panics; public entry points validate domains before any
/// coefficient arithmetic happens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Integer(BigInt),
    PrimeField { p: u64, value: u64 },
}

impl Coefficient {
    pub fn domain(&self) -> DomainDescriptor {
        match self {
            Coefficient::Rational(_) => DomainDescriptor::Rationals,
            Coefficient::Integer(_) => DomainDescriptor::Integers,
            Coefficient::PrimeField { p, .. } => DomainDescriptor::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Integer(n) => n.is_zero(),
            Coefficient::PrimeField { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Integer(n) => n.is_one(),
            Coefficient::PrimeField { value, .. } => *value == 1,
        }
    }

    /// True for negative rationals/integers; prime-field values are
    /// canonical in `[0, p-1]` and never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Integer(n) => n.is_negative(),
            Coefficient::PrimeField { .. } => false,
        }
    }

    pub fn abs(&self) -> Coefficient {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(r.abs()),
            Coefficient::Integer(n) => Coefficient::Integer(n.abs()),
            c @ Coefficient::PrimeField { .. } => c.clone(),
        }
    }

    fn expect_same_domain(&self, rhs: &Coefficient) {
        assert!(
            self.domain() == rhs.domain(),
            "coefficient domain mismatch: {} vs {}",
            self.domain(),
            rhs.domain()
        );
    }

    pub fn add(&self, rhs: &Coefficient) -> Coefficient {
        self.expect_same_domain(rhs);
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a + b),
            (
                Coefficient::PrimeField { p, value: a },
                Coefficient::PrimeField { value: b, .. },
            ) => Coefficient::PrimeField {
                p: *p,
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, rhs: &Coefficient) -> Coefficient {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Integer(a) => Coefficient::Integer(-a),
            Coefficient::PrimeField { p, value } => Coefficient::PrimeField {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    pub fn mul(&self, rhs: &Coefficient) -> Coefficient {
        self.expect_same_domain(rhs);
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a * b),
            (
                Coefficient::PrimeField { p, value: a },
                Coefficient::PrimeField { value: b, .. },
            ) => Coefficient::PrimeField {
                p: *p,
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse where one exists: nonzero field elements and
    /// the integer units `1` and `-1`.
    pub fn inverse(&self) -> Option<Coefficient> {
        match self {
            Coefficient::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Coefficient::Rational(a.recip()))
                }
            }
            Coefficient::Integer(a) => {
                if a.is_one() || (-a).is_one() {
                    Some(Coefficient::Integer(a.clone()))
                } else {
                    None
                }
            }
            Coefficient::PrimeField { p, value } => {
                if *value == 0 {
                    None
                } else {
                    Some(Coefficient::PrimeField {
                        p: *p,
                        value: pow_mod(*value, *p - 2, *p),
                    })
                }
            }
        }
    }

    /// Exact division; `None` when `rhs` does not divide `self` in the domain.
    pub fn checked_div(&self, rhs: &Coefficient) -> Option<Coefficient> {
        self.expect_same_domain(rhs);
        if rhs.is_zero() {
            return None;
        }
        match (self, rhs) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => {
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Some(Coefficient::Integer(q))
                } else {
                    None
                }
            }
            _ => Some(self.mul(&rhs.inverse()?)),
        }
    }

    /// Whether the integer `k` divides this coefficient (integer domain only).
    pub fn divisible_by(&self, k: u64) -> bool {
        match self {
            Coefficient::Integer(n) => (n % BigInt::from(k)).is_zero(),
            _ => false,
        }
    }

    /// Lifts into the rationals; prime-field values lift by their canonical
    /// representative.
    pub fn lift_to_rationals(&self) -> Coefficient {
        match self {
            c @ Coefficient::Rational(_) => c.clone(),
            Coefficient::Integer(n) => Coefficient::Rational(BigRational::from_integer(n.clone())),
            Coefficient::PrimeField { value, .. } => {
                Coefficient::Rational(BigRational::from_integer((*value).into()))
            }
        }
    }

    /// The integer value when the coefficient is integral in its domain.
    pub fn integral_value(&self) -> Option<BigInt> {
        match self {
            Coefficient::Rational(r) => r.denom().is_one().then(|| r.numer().clone()),
            Coefficient::Integer(n) => Some(n.clone()),
            Coefficient::PrimeField { value, .. } => Some((*value).into()),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Integer(n) => write!(f, "{n}"),
            Coefficient::PrimeField { value, .. } => write!(f, "{value}"),
        }
    }
}

/// The balanced residue of `a` modulo `p^d`.
///
/// Returns the unique `b` congruent to `a` mod `p^d` with `b` in
/// `[-p^d/2, p^d/2 - 1]` for `p = 2` and in `[-(p^d-1)/2, (p^d-1)/2]` for
/// odd `p`. This window keeps small numbers fixed once the level is large
/// enough, which is exactly what the p-adic section maps need.
pub fn balanced_residue(a: &Coefficient, d: u32, p: u64) -> Result<Coefficient, RingError> {
    let Coefficient::Integer(n) = a else {
        return Err(RingError::DomainMismatch {
            expected: DomainDescriptor::Integers,
            found: a.domain(),
        });
    };
    if d == 0 {
        return Err(RingError::InvalidLevel);
    }
    if !is_prime_u64(p) {
        return Err(RingError::NotPrime(p));
    }
    let modulus = BigInt::from(p).pow(d);
    let mut r = n.mod_floor(&modulus);
    let keep_below = if p == 2 {
        &modulus / 2
    } else {
        (&modulus - 1) / 2 + 1
    };
    if r >= keep_below {
        r -= &modulus;
    }
    Ok(Coefficient::Integer(r))
}

/// Deterministic Miller-Rabin primality test for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // This witness set decides primality for all u64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz(n: i64) -> Coefficient {
        DomainDescriptor::Integers.integer(n)
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(101));
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(4));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(DomainDescriptor::prime_field(6).is_err());
    }

    #[test]
    fn balanced_residue_examples() {
        // 3 = -1 mod 4, and -1 is inside [-2, 1]
        assert_eq!(balanced_residue(&zz(3), 2, 2).unwrap(), zz(-1));
        // already inside [-4, 3]
        assert_eq!(balanced_residue(&zz(-2), 3, 2).unwrap(), zz(-2));
        // 14 = 6 mod 8, but 6 is outside [-4, 3]
        assert_eq!(balanced_residue(&zz(14), 3, 2).unwrap(), zz(-2));
        // p = 2, d = 1: window is [-1, 0]
        assert_eq!(balanced_residue(&zz(1), 1, 2).unwrap(), zz(-1));
        // 6 = -2 mod 8
        assert_eq!(balanced_residue(&zz(6), 3, 2).unwrap(), zz(-2));
        // odd p: symmetric window [-(p^d-1)/2, (p^d-1)/2]
        assert_eq!(balanced_residue(&zz(2), 1, 3).unwrap(), zz(-1));
        assert_eq!(balanced_residue(&zz(4), 2, 3).unwrap(), zz(4));
        assert_eq!(balanced_residue(&zz(5), 2, 3).unwrap(), zz(-4));
    }

    #[test]
    fn balanced_residue_brute_force_oracle() {
        // Scan a + p^d * k and pick the representative inside the window;
        // the fast path must agree.
        for a in -40i64..=40 {
            for (p, d) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)] {
                let m = (p as i64).pow(d);
                let (lo, hi) = if p == 2 {
                    (-m / 2, m / 2 - 1)
                } else {
                    (-(m - 1) / 2, (m - 1) / 2)
                };
                let expected = (lo..=hi).find(|b| (b - a).rem_euclid(m) == 0).unwrap();
                assert_eq!(
                    balanced_residue(&zz(a), d, p).unwrap(),
                    zz(expected),
                    "a={a} p={p} d={d}"
                );
            }
        }
    }

    #[test]
    fn balanced_residue_rejects_bad_inputs() {
        let q = DomainDescriptor::Rationals.integer(3);
        assert!(matches!(
            balanced_residue(&q, 2, 2),
            Err(RingError::DomainMismatch { .. })
        ));
        assert_eq!(balanced_residue(&zz(3), 0, 2), Err(RingError::InvalidLevel));
        assert_eq!(balanced_residue(&zz(3), 2, 4), Err(RingError::NotPrime(4)));
    }

    #[test]
    fn prime_field_canonical_and_inverse() {
        let d = DomainDescriptor::prime_field(7).unwrap();
        let a = d.integer(-3);
        assert_eq!(a, d.integer(4));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_one());
        assert_eq!(d.integer(0).inverse(), None);
        // ratio over GF(7): 1/2 = 4
        assert_eq!(
            d.ratio(BigInt::from(1), BigInt::from(2)).unwrap(),
            d.integer(4)
        );
    }

    #[test]
    fn rational_canonical_form() {
        let q = DomainDescriptor::Rationals;
        let half = q.ratio(BigInt::from(2), BigInt::from(4)).unwrap();
        assert_eq!(half.to_string(), "1/2");
        let neg = q.ratio(BigInt::from(3), BigInt::from(-6)).unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        assert_eq!(half.add(&neg), q.zero());
    }

    #[test]
    fn integer_division_is_exact_only() {
        assert_eq!(zz(6).checked_div(&zz(3)), Some(zz(2)));
        assert_eq!(zz(7).checked_div(&zz(3)), None);
        assert_eq!(zz(7).checked_div(&zz(0)), None);
        assert_eq!(zz(5).inverse(), None);
        assert_eq!(zz(-1).inverse(), Some(zz(-1)));
    }

    #[test]
    fn ratio_into_integers() {
        let z = DomainDescriptor::Integers;
        assert_eq!(z.ratio(BigInt::from(6), BigInt::from(2)).unwrap(), zz(3));
        assert!(z.ratio(BigInt::from(1), BigInt::from(2)).is_err());
    }
}
