use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

/// Default modulus for the prime field.
pub const DEFAULT_PRIME: u32 = 32003;

/// Coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// `Z/pZ`. The modulus is prime and below 2^32 so products fit a `u64`.
    Prime(u32),
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, PolyError> {
        match u32::try_from(p) {
            Ok(p32) if is_prime(p) => Ok(FieldSpec::Prime(p32)),
            _ => Err(PolyError::NotPrime(p)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => u64::from(*p),
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => Coeff::Modular(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Coeff::Modular(v.rem_euclid(i64::from(*p)) as u32),
        }
    }

    /// Maps an exact rational into the field. Fails if the denominator
    /// vanishes modulo `p`.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff, PolyError> {
        match self {
            FieldSpec::Rationals => Ok(Coeff::Rational(q.clone())),
            FieldSpec::Prime(p) => {
                let num = reduce_bigint(q.numer(), *p);
                let den = reduce_bigint(q.denom(), *p);
                if den == 0 {
                    return Err(PolyError::DenominatorVanishes { modulus: *p });
                }
                Ok(Coeff::Modular(mul_mod(num, inv_mod(den, *p), *p)))
            }
        }
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        c.is_zero()
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (FieldSpec::Prime(p), Coeff::Modular(x), Coeff::Modular(y)) => {
                Coeff::Modular(((u64::from(*x) + u64::from(*y)) % u64::from(*p)) as u32)
            }
            _ => panic!("coefficient does not belong to field {self}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Rational(x)) => Coeff::Rational(-x),
            (FieldSpec::Prime(p), Coeff::Modular(x)) => Coeff::Modular(if *x == 0 { 0 } else { p - x }),
            _ => panic!("coefficient does not belong to field {self}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (FieldSpec::Prime(p), Coeff::Modular(x), Coeff::Modular(y)) => Coeff::Modular(mul_mod(*x, *y, *p)),
            _ => panic!("coefficient does not belong to field {self}"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if a.is_zero() {
            return None;
        }
        Some(match (self, a) {
            (FieldSpec::Rationals, Coeff::Rational(x)) => Coeff::Rational(x.recip()),
            (FieldSpec::Prime(p), Coeff::Modular(x)) => Coeff::Modular(inv_mod(*x, *p)),
            _ => panic!("coefficient does not belong to field {self}"),
        })
    }

    pub fn contains(&self, c: &Coeff) -> bool {
        matches!((self, c), (FieldSpec::Rationals, Coeff::Rational(_)) | (FieldSpec::Prime(_), Coeff::Modular(_)))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// A field element. Which variant is valid is decided by the owning ring's
/// [`FieldSpec`]; mixing variants is a logic error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    /// Canonical representative in `0..p`.
    Modular(u32),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Modular(v) => *v == 1,
        }
    }

    /// Sign and magnitude as printed. Prime-field elements use the symmetric
    /// representative in `(-p/2, p/2]`.
    pub(crate) fn signed_parts(&self, field: &FieldSpec) -> (bool, String) {
        match (self, field) {
            (Coeff::Rational(q), _) => (q.is_negative(), q.abs().to_string()),
            (Coeff::Modular(v), FieldSpec::Prime(p)) => {
                if *v > p / 2 {
                    (true, (p - v).to_string())
                } else {
                    (false, v.to_string())
                }
            }
            (Coeff::Modular(v), FieldSpec::Rationals) => (false, v.to_string()),
        }
    }
}

pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((u64::from(a) * u64::from(b)) % u64::from(p)) as u32
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) = a^-1
    let mut base = u64::from(a % p);
    let mut exp = p - 2;
    let mut acc = 1u64;
    let p64 = u64::from(p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        exp >>= 1;
    }
    acc as u32
}

fn reduce_bigint(v: &BigInt, p: u32) -> u32 {
    let r = v.mod_floor(&BigInt::from(p));
    debug_assert!(r.sign() != Sign::Minus);
    r.to_u32().expect("residue below modulus")
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
