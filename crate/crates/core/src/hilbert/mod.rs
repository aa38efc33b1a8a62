//! Hilbert series, ideal slices, algebra types, strong freeness and the
//! degree-3 tests.

mod slices;
mod tower;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix, PrimeField};
use crate::presentation::{monomial_count, Flavor, Form, Monomial, Presentation};
use crate::series::{anick_polynomial, as_dimension_series, log_op, AlgebraType, PowerSeries};

pub(crate) use slices::MonomialIndex;
pub(crate) use tower::Tower;

/// The rref basis of `I_d` in the monomial coordinates of degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSliceBasis {
    pub degree: usize,
    pub basis: Matrix,
}

impl DegreeSliceBasis {
    pub fn dim(&self) -> usize {
        self.basis.n_rows()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertResult {
    pub series: PowerSeries,
    pub slice_dims: Vec<usize>,
    pub trunc: usize,
}

/// Bases of `I_0, ..., I_max`. Lie presentations are expanded first.
pub fn ideal_slices(p: &Presentation, max: usize) -> Vec<DegreeSliceBasis> {
    let flavor = match p.flavor() {
        Flavor::Commutative => Flavor::Commutative,
        _ => Flavor::Noncommutative,
    };
    slices::slice_bases(p.field(), flavor, p.n(), p.relations(), max)
        .into_iter()
        .enumerate()
        .map(|(degree, basis)| DegreeSliceBasis { degree, basis })
        .collect()
}

/// Dimensions of `A_0, ..., A_max`.
fn algebra_dims(p: &Presentation, max: usize) -> Vec<usize> {
    match p.flavor() {
        Flavor::Commutative => ideal_slices(p, max)
            .iter()
            .map(|s| monomial_count(Flavor::Commutative, p.n(), s.degree) - s.dim())
            .collect(),
        _ => {
            let mut t = Tower::new(p.field(), p.n(), p.relations());
            t.extend_to(max);
            t.dims().to_vec()
        }
    }
}

/// The truncated Hilbert series `sum dim A_d z^d`, `d <= max`.
pub fn hilbert_series(p: &Presentation, max: usize) -> HilbertResult {
    let dims = algebra_dims(p, max);
    let word = p.flavor() != Flavor::Commutative;
    let slice_dims = dims
        .iter()
        .enumerate()
        .map(|(d, a)| {
            let full = if word {
                monomial_count(Flavor::Noncommutative, p.n(), d)
            } else {
                monomial_count(Flavor::Commutative, p.n(), d)
            };
            full - a
        })
        .collect();
    HilbertResult {
        series: PowerSeries::from_ints(dims.iter().map(|&a| a as u64), max),
        slice_dims,
        trunc: max,
    }
}

/// Dimension series `L(z)` of the Lie superalgebra whose enveloping algebra is
/// the Lie-type presentation `p`.
pub fn lie_series(p: &Presentation, max: usize) -> Result<PowerSeries> {
    let a = hilbert_series(&p.expand_lie()?, max).series;
    let l = log_op(&a)?;
    if as_dimension_series(&l).is_none() {
        return Err(Error::NotDimensionSeries(format!("Log gives {l}")));
    }
    Ok(l)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeReport {
    #[serde(rename = "type")]
    pub t: AlgebraType,
    pub minimal: bool,
    pub dropped_relations: Vec<usize>,
}

/// Drops every relation lying in the ideal of the earlier ones (ascending
/// degree, ties in input order) and reports the type of what is left.
pub fn algebra_type(p: &Presentation, max: usize) -> Result<TypeReport> {
    if max < p.max_degree() {
        return Err(Error::Invalid(format!(
            "degree bound {max} is below the largest relation degree {}",
            p.max_degree()
        )));
    }
    let rels = p.relations();
    let mut order: Vec<usize> = (0..rels.len()).collect();
    order.sort_by_key(|&i| rels[i].degree());
    let mut kept: Vec<Form> = Vec::new();
    let mut kept_degrees = Vec::new();
    let mut dropped = Vec::new();
    let field = p.field();
    for i in order {
        let f = &rels[i];
        let member = match p.flavor() {
            Flavor::Commutative => {
                let slices = slices::slice_bases(field, Flavor::Commutative, p.n(), &kept, f.degree());
                let index = MonomialIndex::new(Flavor::Commutative, p.n(), f.degree());
                let top = slices.last().expect("degree >= 2");
                let mut basis = EchelonBasis::new(field, top.n_cols());
                for row in top.rows() {
                    basis.insert(row);
                }
                basis.contains(&index.vector(&field, f))
            }
            _ => Tower::new(field, p.n(), &kept).normal_form(f).is_empty(),
        };
        if member {
            dropped.push(i);
        } else {
            kept.push(f.clone());
            kept_degrees.push(f.degree());
        }
    }
    dropped.sort_unstable();
    Ok(TypeReport {
        t: AlgebraType::new(p.n(), kept_degrees)?,
        minimal: dropped.is_empty(),
        dropped_relations: dropped,
    })
}

/// Whether `B(z) p_t(z) = 1` through the degree bound; a bounded certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongFreeVerdict {
    pub strongly_free: bool,
    pub degree: usize,
    pub product: PowerSeries,
}

pub fn strongly_free_test(p: &Presentation, max: usize) -> Result<StrongFreeVerdict> {
    let q = p.as_associative()?;
    let b = hilbert_series(&q, max).series;
    let product = b.mul(&anick_polynomial(&q.presentation_type(), max));
    Ok(StrongFreeVerdict {
        strongly_free: product == PowerSeries::one(max),
        degree: max,
        product,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span3 {
    pub independent: bool,
    pub spanning: bool,
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
}

/// Rank of the degree-3 multiples `{x_i f_j, f_j x_i}` (words) or `{x_i f_j}`
/// (commutative) of quadratic relations.
pub fn degree3_span_test(p: &Presentation) -> Result<Span3> {
    if let Some(i) = p.relations().iter().position(|f| f.degree() != 2) {
        return Err(Error::NotQuadratic(i));
    }
    let flavor = if p.flavor() == Flavor::Commutative {
        Flavor::Commutative
    } else {
        Flavor::Noncommutative
    };
    let field: PrimeField = p.field();
    let n = p.n();
    let index = MonomialIndex::new(flavor, n, 3);
    let cols = monomial_count(flavor, n, 3);
    let mut basis = EchelonBasis::new(field, cols);
    let mut rows = 0;
    let one = Monomial::one();
    for f in p.relations() {
        for x in 0..n as u16 {
            let g = Monomial::for_flavor(flavor, vec![x]);
            let mut multiples = vec![f.multiply(&g, &one, flavor, &field)];
            if flavor == Flavor::Noncommutative {
                multiples.push(f.multiply(&one, &g, flavor, &field));
            }
            for m in multiples {
                rows += 1;
                basis.insert(&index.vector(&field, &m));
            }
        }
    }
    let rank = basis.rank();
    Ok(Span3 {
        independent: rank == rows,
        spanning: rank == cols,
        rank,
        rows,
        cols,
    })
}
