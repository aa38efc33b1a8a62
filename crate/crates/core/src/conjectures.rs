//! Sampled generic series compared with the conjectured closed forms.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generic::{coefficientwise_min, generic_estimate, max_lie_relations, sample_presentation};
use crate::hilbert::lie_series;
use crate::koszul::koszul_numerical_test;
use crate::linalg::PrimeField;
use crate::presentation::Flavor;
use crate::series::{froberg_series, log_op, quadratic_inverse, AlgebraType, PowerSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjecture {
    Froberg,
    Anick,
    Lie,
    Genkos,
}

/// Sampling parameters shared by all checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub field: PrimeField,
}

impl Sampling {
    pub fn new(degree: usize, samples: usize, seed: u64) -> Self {
        Sampling {
            degree,
            samples,
            seed,
            field: PrimeField::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    pub conjecture: Conjecture,
    pub flavor: Flavor,
    #[serde(rename = "type")]
    pub t: AlgebraType,
    pub degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub prime: u64,
    pub expected: PowerSeries,
    pub observed: PowerSeries,
    #[serde(rename = "match")]
    pub matches: Vec<bool>,
    pub proven_regime: bool,
    /// Koszul checks only: whether each sample passed the numerical test.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_passes: Option<Vec<bool>>,
}

impl ConjectureVerdict {
    pub fn holds(&self) -> bool {
        self.matches.iter().all(|&m| m)
    }

    /// `confirmed`, `violation` (inside a proven regime) or `conjectural
    /// mismatch`.
    pub fn status(&self) -> &'static str {
        match (self.holds(), self.proven_regime) {
            (true, _) => "confirmed",
            (false, true) => "violation",
            (false, false) => "conjectural mismatch",
        }
    }
}

fn per_degree(expected: &PowerSeries, observed: &PowerSeries) -> Vec<bool> {
    (0..=expected.trunc())
        .map(|d| expected.coeff(d) == observed.coeff(d))
        .collect()
}

/// Commutative: the generic series against `F_t(z)`. Proven for `r <= n`,
/// `n <= 3` and `r = n + 1`.
pub fn check_froberg(t: &AlgebraType, s: Sampling) -> Result<ConjectureVerdict> {
    let expected = froberg_series(t, s.degree);
    let report = generic_estimate(Flavor::Commutative, t, s.degree, s.samples, s.seed, s.field)?;
    let (n, r) = (t.n, t.r());
    Ok(ConjectureVerdict {
        conjecture: Conjecture::Froberg,
        flavor: Flavor::Commutative,
        t: t.clone(),
        degree: s.degree,
        samples: s.samples,
        seed: s.seed,
        prime: s.field.modulus(),
        matches: per_degree(&expected, &report.estimate),
        expected,
        observed: report.estimate,
        proven_regime: r <= n || n <= 3 || r == n + 1,
        sample_passes: None,
    })
}

/// Quadratic words: the generic series against `[1/(1 - n z + r z^2)]`.
/// Proven for `r <= n^2/4`, `r >= n^2/2` and `n <= 6`.
pub fn check_anick_quadratic(n: usize, r: usize, s: Sampling) -> Result<ConjectureVerdict> {
    let t = AlgebraType::quadratic(n, r);
    let expected = quadratic_inverse(n, r, s.degree).bracket();
    let report = generic_estimate(Flavor::Noncommutative, &t, s.degree, s.samples, s.seed, s.field)?;
    Ok(ConjectureVerdict {
        conjecture: Conjecture::Anick,
        flavor: Flavor::Noncommutative,
        t,
        degree: s.degree,
        samples: s.samples,
        seed: s.seed,
        prime: s.field.modulus(),
        matches: per_degree(&expected, &report.estimate),
        expected,
        observed: report.estimate,
        proven_regime: 4 * r <= n * n || 2 * r >= n * n || n <= 6,
        sample_passes: None,
    })
}

/// `[Log(1/(1 - n z + r z^2))]`, bracketed from degree 1.
pub fn lie_expected(n: usize, r: usize, degree: usize) -> PowerSeries {
    log_op(&quadratic_inverse(n, r, degree))
        .expect("constant term 1")
        .bracket_from(1)
}

/// Lie type: the minimum sampled Lie series against `[Log(1/(1 - n z + r z^2))]`.
/// Proven for `r <= n^2/4` and `r >= (n^2 - 1)/3`.
pub fn check_lie(n: usize, r: usize, s: Sampling) -> Result<ConjectureVerdict> {
    if r > max_lie_relations(n) {
        return Err(Error::TooManyLieRelations {
            r,
            max: max_lie_relations(n),
        });
    }
    if s.samples == 0 {
        return Err(Error::Invalid("at least one sample is required".into()));
    }
    let t = AlgebraType::quadratic(n, r);
    let series: Vec<PowerSeries> = (0..s.samples as u64)
        .into_par_iter()
        .map(|i| {
            let p = sample_presentation(Flavor::Lie, &t, s.field, s.seed.wrapping_add(i))?;
            lie_series(&p, s.degree)
        })
        .collect::<Result<_>>()?;
    let (observed, _) = coefficientwise_min(&series);
    let expected = lie_expected(n, r, s.degree);
    Ok(ConjectureVerdict {
        conjecture: Conjecture::Lie,
        flavor: Flavor::Lie,
        t,
        degree: s.degree,
        samples: s.samples,
        seed: s.seed,
        prime: s.field.modulus(),
        matches: per_degree(&expected, &observed),
        expected,
        observed,
        proven_regime: 4 * r <= n * n || 3 * r + 1 >= n * n,
        sample_passes: None,
    })
}

/// Whether a generic quadratic word algebra of type `(n, r)` is Koszul.
pub fn koszul_regime(n: usize, r: usize) -> bool {
    4 * r <= n * n || 4 * r >= 3 * n * n
}

/// Generic Koszulness: every sample's `A(z) A^!(-z)` is compared with `1`.
/// `expected` is the constant series 1 and `observed` the first sample's
/// product; `match` holds at a degree when every sample agrees there with the
/// regime's prediction (all products equal to 1 inside the Koszul regime, at
/// least one deviation through the bound outside it).
pub fn check_genkos(n: usize, r: usize, s: Sampling) -> Result<ConjectureVerdict> {
    if s.samples == 0 {
        return Err(Error::Invalid("at least one sample is required".into()));
    }
    let t = AlgebraType::quadratic(n, r);
    let checks = (0..s.samples as u64)
        .into_par_iter()
        .map(|i| {
            let p = sample_presentation(Flavor::Noncommutative, &t, s.field, s.seed.wrapping_add(i))?;
            koszul_numerical_test(&p, s.degree)
        })
        .collect::<Result<Vec<_>>>()?;
    let koszul = koszul_regime(n, r);
    let sample_passes: Vec<bool> = checks.iter().map(|c| c.passes).collect();
    let expected = PowerSeries::one(s.degree);
    let observed = checks[0].product.clone();
    let matches = if koszul {
        (0..=s.degree)
            .map(|d| checks.iter().all(|c| c.product.coeff(d) == expected.coeff(d)))
            .collect()
    } else {
        vec![sample_passes.iter().all(|&p| !p); s.degree + 1]
    };
    Ok(ConjectureVerdict {
        conjecture: Conjecture::Genkos,
        flavor: Flavor::Noncommutative,
        t,
        degree: s.degree,
        samples: s.samples,
        seed: s.seed,
        prime: s.field.modulus(),
        expected,
        observed,
        matches,
        proven_regime: true,
        sample_passes: Some(sample_passes),
    })
}

/// All `(n, r)` with `n_min <= n <= n_max` and `r_range(n)` relations, checked
/// concurrently and returned in `(n, r)` order.
pub fn sweep<F, R>(n_min: usize, n_max: usize, r_range: R, check: F) -> Result<Vec<ConjectureVerdict>>
where
    F: Fn(usize, usize) -> Result<ConjectureVerdict> + Sync,
    R: Fn(usize) -> std::ops::RangeInclusive<usize>,
{
    let params: Vec<(usize, usize)> = (n_min..=n_max)
        .flat_map(|n| r_range(n).map(move |r| (n, r)))
        .collect();
    params.par_iter().map(|&(n, r)| check(n, r)).collect()
}
