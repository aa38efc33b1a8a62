//! Positivity of `1/(1 - n z + r z^2)` and the closed-form degree at which it
//! first fails.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Positivity {
    pub all_positive: bool,
    pub first_nonpositive_degree: Option<usize>,
}

/// Expands `1/(1 - n z + r z^2)` through degree `trunc` by its recurrence and
/// reports where the coefficients `a_1..a_D` stop being positive.
pub fn quadratic_inverse_positivity(n: u64, r: u64, trunc: usize) -> Positivity {
    let n = BigInt::from(n);
    let r = BigInt::from(r);
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for k in 1..=trunc {
        let next = &n * &cur - &r * &prev;
        if !next.is_positive() {
            return Positivity {
                all_positive: false,
                first_nonpositive_degree: Some(k),
            };
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Positivity {
        all_positive: true,
        first_nonpositive_degree: None,
    }
}

/// Closed interval with rational endpoints.
#[derive(Debug, Clone)]
struct Interval {
    lo: BigRational,
    hi: BigRational,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    let scaled = x * BigRational::from_integer(s.clone());
    BigRational::new(scaled.numer().div_floor(scaled.denom()), s)
}

fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    let scaled = x * BigRational::from_integer(s.clone());
    BigRational::new(scaled.numer().div_ceil(scaled.denom()), s)
}

impl Interval {
    fn outward(lo: BigRational, hi: BigRational, bits: u32) -> Self {
        debug_assert!(lo <= hi);
        Interval {
            lo: round_down(&lo, bits),
            hi: round_up(&hi, bits),
        }
    }
}

/// Encloses the limit of an alternating series whose terms decrease in
/// magnitude: two consecutive partial sums bracket it. `term(k)` is the
/// (signed) k-th term.
fn alternating_sum<F>(mut term: F, bits: u32) -> Interval
where
    F: FnMut(usize) -> BigRational,
{
    let eps = BigRational::new(BigInt::one(), pow2(bits + 8));
    let mut sum = BigRational::zero();
    let mut k = 0;
    loop {
        let t = term(k);
        let next = &sum + &t;
        if t.abs() < eps && k > 0 {
            let (lo, hi) = if sum <= next { (sum, next) } else { (next, sum) };
            return Interval::outward(lo, hi, bits + 4);
        }
        sum = next;
        k += 1;
    }
}

/// `arctan(1/x)` for integer `x >= 2`.
fn arctan_inv(x: i64, bits: u32) -> Interval {
    let x = BigInt::from(x);
    alternating_sum(
        |k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let den = BigInt::from(2 * k + 1) * num_traits::pow(x.clone(), 2 * k + 1);
            BigRational::new(BigInt::from(sign), den)
        },
        bits,
    )
}

/// Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
fn pi(bits: u32) -> Interval {
    let a = arctan_inv(5, bits + 6);
    let b = arctan_inv(239, bits + 6);
    let c16 = BigRational::from_integer(16.into());
    let c4 = BigRational::from_integer(4.into());
    Interval::outward(&c16 * &a.lo - &c4 * &b.hi, &c16 * &a.hi - &c4 * &b.lo, bits)
}

/// `cos(y)` for rational `0 <= y < sqrt(2)`, where the Taylor terms decrease.
fn cos(y: &BigRational, bits: u32) -> Interval {
    let y2 = y * y;
    let mut term = BigRational::one();
    alternating_sum(
        |k| {
            if k > 0 {
                let d = BigInt::from((2 * k - 1) * (2 * k));
                term = -(&term * &y2) / BigRational::from_integer(d);
            }
            term.clone()
        },
        bits,
    )
}

/// Encloses `cos^2(pi / m)` for `m >= 3`.
fn cos_sq_pi_over(m: u64, bits: u32) -> Interval {
    let p = pi(bits + 8);
    let mm = BigRational::from_integer(BigInt::from(m));
    let x_lo = &p.lo / &mm;
    let x_hi = &p.hi / &mm;
    // cos is decreasing and positive on [0, pi/2]
    let lo = cos(&x_hi, bits + 8).lo;
    let hi = cos(&x_lo, bits + 8).hi;
    Interval::outward(&lo * &lo, &hi * &hi, bits)
}

/// Exact values of `cos^2(pi/m)` where it is rational.
fn rational_cos_sq(m: u64) -> Option<BigRational> {
    let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    match m {
        3 => Some(q(1, 4)),
        4 => Some(q(1, 2)),
        6 => Some(q(3, 4)),
        _ => None,
    }
}

/// Decides `cos^2(pi/m) >= target`, refining precision until the enclosure
/// separates from `target`. Only `m` in {3, 4, 6} gives a rational value, so
/// for every other `m` the comparison is strict and refinement terminates.
fn cos_sq_at_least(m: u64, target: &BigRational) -> bool {
    if let Some(v) = rational_cos_sq(m) {
        return &v >= target;
    }
    let mut bits = 32;
    loop {
        let iv = cos_sq_pi_over(m, bits);
        if &iv.lo >= target {
            return true;
        }
        if &iv.hi < target {
            return false;
        }
        bits *= 2;
    }
}

/// Smallest `k >= 2` with `r >= (tan^2(pi/(k+1)) + 1) n^2 / 4`, i.e. the
/// degree at which `[1/(1 - n z + r z^2)]` first vanishes.
///
/// The inequality is rearranged to `cos^2(pi/(k+1)) >= n^2 / (4r)` and decided
/// without floating point.
pub fn vanishing_threshold(n: u64, r: u64) -> Result<u64> {
    if 4 * r <= n * n {
        return Err(Error::NeverVanishes);
    }
    let target = BigRational::new(BigInt::from(n * n), BigInt::from(4 * r));
    let mut k = 2;
    loop {
        if cos_sq_at_least(k + 1, &target) {
            return Ok(k);
        }
        k += 1;
    }
}
