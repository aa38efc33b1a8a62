//! The Exp/Log pair relating the dimension series `L(z)` of a Lie
//! superalgebra generated in odd degree to the Hilbert series of its
//! enveloping algebra.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PowerSeries;
use crate::error::{Error, Result};

/// The Möbius function.
pub fn mobius(m: u64) -> i64 {
    assert!(m >= 1, "mobius is defined for m >= 1");
    let mut m = m;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `Exp(L) = prod_i (1 + z^{2i-1})^{e_{2i-1}} / (1 - z^{2i})^{e_{2i}}`.
pub fn exp_op(l: &PowerSeries) -> Result<PowerSeries> {
    let trunc = l.trunc();
    if !l.coeff(0).is_zero() {
        return Err(Error::NotDimensionSeries("nonzero constant term".into()));
    }
    let mut out = PowerSeries::one(trunc);
    for i in 1..=trunc {
        let c = l.coeff(i);
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NotDimensionSeries(format!("coefficient {c} at degree {i}")));
        }
        let e = c.to_integer();
        if e.is_zero() {
            continue;
        }
        let mut factor = vec![BigInt::zero(); trunc + 1];
        // binomial coefficients C(e, k) (odd) or C(e + k - 1, k) (even)
        let mut binom = BigInt::one();
        let mut k = 0usize;
        while i * k <= trunc {
            factor[i * k] = binom.clone();
            let kk = BigInt::from(k);
            binom = if i % 2 == 1 {
                binom * (&e - &kk) / (&kk + 1)
            } else {
                binom * (&e + &kk) / (&kk + 1)
            };
            if binom.is_zero() {
                break;
            }
            k += 1;
        }
        out = out.mul(&PowerSeries::from_ints(factor, trunc));
    }
    Ok(out)
}

/// Formal `log V` for `V` with constant term 1.
fn formal_log(v: &PowerSeries) -> PowerSeries {
    let trunc = v.trunc();
    if trunc == 0 {
        return PowerSeries::zero(0);
    }
    let q = v.derivative().mul(&v.inverse().expect("constant term 1"));
    let mut coeffs = vec![BigRational::zero(); trunc + 1];
    for k in 1..=trunc {
        coeffs[k] = q.coeff(k - 1) / BigRational::from_integer(BigInt::from(k));
    }
    PowerSeries::from_rationals(coeffs)
}

/// `Log(V) = sum_r mu(r)/r * log V((-1)^{r+1} z^r)`, the inverse of [`exp_op`].
pub fn log_op(v: &PowerSeries) -> Result<PowerSeries> {
    if !v.coeff(0).is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let trunc = v.trunc();
    let log_v = formal_log(v);
    let mut out = PowerSeries::zero(trunc);
    for r in 1..=trunc {
        let mu = mobius(r as u64);
        if mu == 0 {
            continue;
        }
        let term = log_v.substitute_power(r, r % 2 == 0);
        let w = BigRational::new(BigInt::from(mu), BigInt::from(r));
        out = out.add(&term.scale(&w));
    }
    Ok(out)
}

/// Integer coefficients of a Lie dimension series, if it is one.
pub fn as_dimension_series(l: &PowerSeries) -> Option<Vec<u64>> {
    l.coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() && !c.is_negative() {
                c.to_integer().to_u64()
            } else {
                None
            }
        })
        .collect()
}
