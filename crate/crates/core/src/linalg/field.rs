use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field `F_p` for an odd prime `p < 2^32`.
///
/// Products of two residues fit in a `u64`, so every operation is a single
/// multiply followed by a reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeField {
    p: u64,
}

/// A canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub(crate) u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub const DEFAULT_PRIME: u64 = 2_147_483_647;

    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 32).contains(&p) || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Wraps a value already known to lie in `[0, p)`.
    #[inline]
    pub fn from_canonical(&self, v: u64) -> FieldElement {
        debug_assert!(v < self.p);
        FieldElement(v)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u64)
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        let r = v.mod_floor(&BigInt::from(self.p));
        FieldElement(r.to_u64().expect("residue fits"))
    }

    /// Maps `num / den` to `num * den^{-1}`.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::DivisionByCharacteristic(self.p));
        }
        Ok(self.mul(self.from_bigint(num), self.inv(d)))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 * b.0 % self.p)
    }

    pub fn pow(&self, mut a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Representative in `(-p/2, p/2]`, used when printing coefficients.
    pub fn signed(&self, a: FieldElement) -> i64 {
        if a.0 > self.p / 2 {
            a.0 as i64 - self.p as i64
        } else {
            a.0 as i64
        }
    }

    /// Inverse of [`PrimeField::signed`] for arbitrary integers.
    pub fn lift_signed(&self, v: &BigInt) -> FieldElement {
        if v.is_negative() {
            self.neg(self.from_bigint(&-v))
        } else {
            self.from_bigint(v)
        }
    }

    pub fn half(&self) -> FieldElement {
        self.inv(FieldElement(2))
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField {
            p: Self::DEFAULT_PRIME,
        }
    }
}

impl TryFrom<u64> for PrimeField {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u64 {
    fn from(f: PrimeField) -> u64 {
        f.p
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}
