//! Random specializations standing in for generic coefficients, the
//! minimal-series estimate built from them, explicit constructions and the
//! named corpus.

mod constructions;
mod corpus;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{algebra_type, hilbert_series};
use crate::linalg::{FieldElement, PrimeField};
use crate::presentation::{enumerate_monomials, Flavor, Form, Monomial, Presentation};
use crate::series::{AlgebraType, PowerSeries};

pub use constructions::{construct_anick, construct_lie_strongly_free, construct_strongly_free};
pub use corpus::{corpus, corpus_entry, corpus_names, corpus_source};

/// Number of relations a Lie-type algebra on `n` generators can carry.
pub fn max_lie_relations(n: usize) -> usize {
    n * (n + 1) / 2
}

fn draw(rng: &mut ChaCha8Rng, field: &PrimeField) -> FieldElement {
    field.from_canonical(rng.gen_range(0..field.modulus()))
}

/// A presentation of type `t` whose coefficients are independent uniform
/// draws from `F_p`, determined by `seed`.
pub fn sample_presentation(flavor: Flavor, t: &AlgebraType, field: PrimeField, seed: u64) -> Result<Presentation> {
    let n = t.n;
    if flavor == Flavor::Lie {
        if t.r() > max_lie_relations(n) {
            return Err(Error::TooManyLieRelations {
                r: t.r(),
                max: max_lie_relations(n),
            });
        }
        if !t.is_quadratic() {
            return Err(Error::NotLieRelation(format!("type {t} is not quadratic")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rels = Vec::with_capacity(t.r());
    for &d in &t.degrees {
        let mut form = Form::zero(d);
        if flavor == Flavor::Lie {
            for j in 0..n as u16 {
                for l in j..n as u16 {
                    let c = draw(&mut rng, &field);
                    form.add_term(&field, Monomial::word(vec![j, l]), c);
                    if j != l {
                        form.add_term(&field, Monomial::word(vec![l, j]), c);
                    }
                }
            }
        } else {
            for m in enumerate_monomials(flavor, n, d) {
                let c = draw(&mut rng, &field);
                form.add_term(&field, m, c);
            }
        }
        rels.push(form);
    }
    Presentation::new(flavor, Presentation::default_names(n), rels, field)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericReport {
    #[serde(rename = "type")]
    pub t: AlgebraType,
    pub flavor: Flavor,
    pub prime: u64,
    pub seeds: Vec<u64>,
    pub per_sample_series: Vec<PowerSeries>,
    /// Type of each sample after dropping relations in the ideal of earlier ones.
    pub per_sample_types: Vec<AlgebraType>,
    /// Coefficientwise minimum over the samples; dominates `A_t(z)` degreewise.
    pub estimate: PowerSeries,
    pub unanimous: Vec<bool>,
}

impl GenericReport {
    pub fn all_unanimous(&self) -> bool {
        self.unanimous.iter().all(|&u| u)
    }
}

/// Coefficientwise minimum of series sharing a truncation, and per-degree
/// agreement.
pub fn coefficientwise_min(series: &[PowerSeries]) -> (PowerSeries, Vec<bool>) {
    let trunc = series[0].trunc();
    let mut coeffs = Vec::with_capacity(trunc + 1);
    let mut unanimous = Vec::with_capacity(trunc + 1);
    for d in 0..=trunc {
        let first = series[0].coeff(d);
        let min = series.iter().map(|s| s.coeff(d)).min().expect("nonempty");
        coeffs.push(min.clone());
        unanimous.push(series.iter().all(|s| s.coeff(d) == first));
    }
    (PowerSeries::from_rationals(coeffs), unanimous)
}

/// Samples `samples` presentations of type `t` (seeds `base_seed + i`) and
/// takes the coefficientwise minimum of their Hilbert series.
pub fn generic_estimate(
    flavor: Flavor,
    t: &AlgebraType,
    max: usize,
    samples: usize,
    base_seed: u64,
    field: PrimeField,
) -> Result<GenericReport> {
    if samples == 0 {
        return Err(Error::Invalid("at least one sample is required".into()));
    }
    let seeds: Vec<u64> = (0..samples as u64).map(|i| base_seed.wrapping_add(i)).collect();
    let type_bound = t.degrees.iter().copied().max().unwrap_or(0).max(max);
    let results: Vec<(PowerSeries, AlgebraType)> = seeds
        .par_iter()
        .map(|&seed| {
            let p = sample_presentation(flavor, t, field, seed)?;
            let series = hilbert_series(&p, max).series;
            let kept = algebra_type(&p, type_bound)?.t;
            Ok((series, kept))
        })
        .collect::<Result<_>>()?;
    let (per_sample_series, per_sample_types): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let (estimate, unanimous) = coefficientwise_min(&per_sample_series);
    Ok(GenericReport {
        t: t.clone(),
        flavor,
        prime: field.modulus(),
        seeds,
        per_sample_series,
        per_sample_types,
        estimate,
        unanimous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> AlgebraType {
        AlgebraType::parse(s).unwrap()
    }

    #[test]
    fn sampling_is_deterministic() {
        let f = PrimeField::default();
        let t = ty("3;2,2,3");
        for flavor in [Flavor::Commutative, Flavor::Noncommutative] {
            assert_eq!(
                sample_presentation(flavor, &t, f, 7).unwrap(),
                sample_presentation(flavor, &t, f, 7).unwrap()
            );
            assert_ne!(
                sample_presentation(flavor, &t, f, 7).unwrap(),
                sample_presentation(flavor, &t, f, 8).unwrap()
            );
        }
    }

    #[test]
    fn sample_shapes() {
        let f = PrimeField::default();
        let p = sample_presentation(Flavor::Noncommutative, &AlgebraType::quadratic(2, 1), f, 1).unwrap();
        assert_eq!(p.relations()[0].terms().len(), 4);
        let p = sample_presentation(Flavor::Lie, &AlgebraType::quadratic(3, 3), f, 1).unwrap();
        assert_eq!(p.flavor(), Flavor::Lie);
        assert!(sample_presentation(Flavor::Lie, &AlgebraType::quadratic(2, 4), f, 1).is_err());
    }

    #[test]
    fn estimate_examples() {
        let f = PrimeField::default();
        let r = generic_estimate(Flavor::Commutative, &ty("3;2,2,2"), 4, 3, 0, f).unwrap();
        assert_eq!(r.estimate.to_i64s(), vec![1, 3, 3, 1, 0]);
        assert!(r.all_unanimous());
        let r = generic_estimate(Flavor::Noncommutative, &AlgebraType::quadratic(2, 2), 4, 3, 0, f).unwrap();
        assert_eq!(r.estimate.to_i64s(), vec![1, 2, 2, 0, 0]);
        let r = generic_estimate(Flavor::Commutative, &ty("2;2,2,3"), 4, 3, 0, f).unwrap();
        assert_eq!(r.estimate.to_i64s(), vec![1, 2, 1, 0, 0]);
        assert!(r.per_sample_types.iter().all(|t| t.to_string() == "(2;2,2)"));
        assert!(generic_estimate(Flavor::Commutative, &ty("2;2"), 3, 0, 0, f).is_err());
    }
}
