//! Truncated power series with exact rational coefficients, together with
//! the series operators used to state minimal Hilbert series.

mod lie;
mod threshold;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use lie::{as_dimension_series, exp_op, log_op, mobius};
pub use threshold::{quadratic_inverse_positivity, vanishing_threshold, Positivity};

/// A power series `a_0 + a_1 z + ... + a_D z^D` known exactly through degree `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// The zero series truncated at `trunc`.
    pub fn zero(trunc: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigRational::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Series from exact coefficients; `coeffs.len()` must be at least 1.
    pub fn from_rationals(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        PowerSeries { coeffs }
    }

    /// Integer coefficients, padded with zeros (or cut) to length `trunc + 1`.
    pub fn from_ints<I, T>(coeffs: I, trunc: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut c: Vec<BigRational> = coeffs
            .into_iter()
            .take(trunc + 1)
            .map(|v| BigRational::from_integer(v.into()))
            .collect();
        c.resize(trunc + 1, BigRational::zero());
        PowerSeries { coeffs: c }
    }

    /// The polynomial `sum c_i z^i` from `(degree, coefficient)` pairs, truncated.
    pub fn from_terms(terms: &[(usize, i64)], trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for &(d, c) in terms {
            if d <= trunc {
                s.coeffs[d] += BigRational::from_integer(c.into());
            }
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &BigRational {
        &self.coeffs[d]
    }

    /// Restriction to degrees `<= trunc` (no-op if already shorter).
    pub fn truncate(&self, trunc: usize) -> Self {
        let t = trunc.min(self.trunc());
        PowerSeries {
            coeffs: self.coeffs[..=t].to_vec(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Integer coefficients as `i64`. Panics on non-integral or huge values.
    pub fn to_i64s(&self) -> Vec<i64> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral coefficient {c}");
                c.to_integer().to_i64().expect("coefficient fits in i64")
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let t = self.trunc().min(other.trunc());
        PowerSeries {
            coeffs: (0..=t).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let t = self.trunc().min(other.trunc());
        PowerSeries {
            coeffs: (0..=t).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller of the two bounds.
    pub fn mul(&self, other: &Self) -> Self {
        let t = self.trunc().min(other.trunc());
        let mut out = vec![BigRational::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(t + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = a0.recip();
        let t = self.trunc();
        let mut b: Vec<BigRational> = Vec::with_capacity(t + 1);
        b.push(inv0.clone());
        for k in 1..=t {
            let mut s = BigRational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    s += &self.coeffs[i] * &b[k - i];
                }
            }
            b.push(-(s * &inv0));
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// `A(-z)`.
    pub fn negate_variable(&self) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `A(s z^k)` for `s = ±1`, truncated at the same bound.
    pub fn substitute_power(&self, k: usize, negate: bool) -> Self {
        assert!(k >= 1);
        let t = self.trunc();
        let mut out = vec![BigRational::zero(); t + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            let d = i * k;
            if d > t {
                break;
            }
            out[d] = if negate && i % 2 == 1 { -c } else { c.clone() };
        }
        PowerSeries { coeffs: out }
    }

    /// Formal derivative, with the truncation bound lowered by one.
    pub fn derivative(&self) -> Self {
        if self.trunc() == 0 {
            return PowerSeries::zero(0);
        }
        PowerSeries {
            coeffs: (1..=self.trunc())
                .map(|i| &self.coeffs[i] * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        }
    }

    /// The bracket `[A]`: keeps `a_i` while every `a_j` with `j <= i` is
    /// positive, and zeroes everything from the first nonpositive term on.
    pub fn bracket(&self) -> Self {
        self.bracket_from(0)
    }

    /// The bracket applied to the coefficients from degree `start` on; lower
    /// coefficients are kept as they are. `bracket_from(1)` suits series with
    /// zero constant term, such as Lie dimension series.
    pub fn bracket_from(&self, start: usize) -> Self {
        let mut alive = true;
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if i < start {
                        return c.clone();
                    }
                    alive = alive && c.is_positive();
                    if alive {
                        c.clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        }
    }

    /// Lexicographic comparison of coefficient sequences.
    pub fn lex_compare(&self, other: &Self) -> Result<Ordering> {
        check_same_trunc(self, other)?;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return Ok(o),
            }
        }
        Ok(Ordering::Equal)
    }

    /// `true` iff every coefficient of `self` is at least that of `other`.
    pub fn coeffwise_ge(&self, other: &Self) -> Result<bool> {
        check_same_trunc(self, other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a >= b))
    }

    /// First degree at which the coefficient is `<= 0`.
    pub fn first_nonpositive(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_positive())
    }

    /// Decimal strings, lowest degree first (`"p/q"` for non-integers).
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::Invalid("empty coefficient list".into()));
        }
        let coeffs = items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(PowerSeries { coeffs })
    }
}

fn check_same_trunc(a: &PowerSeries, b: &PowerSeries) -> Result<()> {
    if a.trunc() != b.trunc() {
        return Err(Error::TruncationMismatch(a.trunc(), b.trunc()));
    }
    Ok(())
}

/// Parses `"-3"`, `"7/2"` and the like.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.trunc() + 1)
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items: Vec<String> = Vec::deserialize(deserializer)?;
        PowerSeries::from_strings(&items).map_err(serde::de::Error::custom)
    }
}

/// A type `(n; d_1, ..., d_r)`: `n` degree-one generators and relations of
/// the listed degrees, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraType {
    pub n: usize,
    pub degrees: Vec<usize>,
}

impl AlgebraType {
    pub fn new(n: usize, mut degrees: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("a type needs at least one generator".into()));
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::LowDegree(d));
        }
        degrees.sort_unstable();
        Ok(AlgebraType { n, degrees })
    }

    /// The quadratic type `(n, r)`.
    pub fn quadratic(n: usize, r: usize) -> Self {
        assert!(n >= 1);
        AlgebraType {
            n,
            degrees: vec![2; r],
        }
    }

    pub fn r(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_quadratic(&self) -> bool {
        self.degrees.iter().all(|&d| d == 2)
    }

    /// Parses `"3;2,2,2"` (or `"4;"` for no relations).
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("bad type {s:?}, expected e.g. \"3;2,2,2\""));
        let (n, rest) = s.split_once(';').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let degrees = rest
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        AlgebraType::new(n, degrees)
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.n)?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// `prod (1 - z^{d_i}) / (1 - z)^n`, unbracketed.
pub fn froberg_product(t: &AlgebraType, trunc: usize) -> PowerSeries {
    let mut num = PowerSeries::one(trunc);
    for &d in &t.degrees {
        num = num.mul(&PowerSeries::from_terms(&[(0, 1), (d, -1)], trunc));
    }
    // 1/(1-z)^n has coefficients C(n-1+k, k)
    let mut den_inv = vec![BigInt::zero(); trunc + 1];
    let mut c = BigInt::one();
    for (k, slot) in den_inv.iter_mut().enumerate() {
        *slot = c.clone();
        c = c * BigInt::from(t.n + k) / BigInt::from(k + 1);
    }
    num.mul(&PowerSeries::from_ints(den_inv, trunc))
}

/// The Fröberg series `F_t(z)`.
pub fn froberg_series(t: &AlgebraType, trunc: usize) -> PowerSeries {
    froberg_product(t, trunc).bracket()
}

/// `p_t(z) = 1 - n z + sum z^{d_i}`, truncated at `trunc`.
pub fn anick_polynomial(t: &AlgebraType, trunc: usize) -> PowerSeries {
    let mut terms = vec![(0usize, 1i64), (1, -(t.n as i64))];
    terms.extend(t.degrees.iter().map(|&d| (d, 1)));
    PowerSeries::from_terms(&terms, trunc)
}

/// `1 / (1 - n z + r z^2)`.
pub fn quadratic_inverse(n: usize, r: usize, trunc: usize) -> PowerSeries {
    anick_polynomial(&AlgebraType::quadratic(n, r), trunc)
        .inverse()
        .expect("constant term 1")
}
