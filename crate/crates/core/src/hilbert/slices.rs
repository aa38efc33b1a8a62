//! Ideal slices `I_d` in monomial coordinates.

use std::collections::HashMap;

use crate::linalg::{normalize_sparse, EchelonBasis, FieldElement, Matrix, PrimeField, SparseVec};
use crate::presentation::{enumerate_monomials, monomial_count, Flavor, Form, Monomial};

/// Column positions of the degree-`d` monomials.
pub(crate) struct MonomialIndex {
    flavor: Flavor,
    n: usize,
    lookup: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub(crate) fn new(flavor: Flavor, n: usize, d: usize) -> Self {
        let lookup = if flavor.is_word_flavor() {
            HashMap::new()
        } else {
            enumerate_monomials(flavor, n, d)
                .into_iter()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect()
        };
        MonomialIndex { flavor, n, lookup }
    }

    pub(crate) fn index(&self, m: &Monomial) -> usize {
        if self.flavor.is_word_flavor() {
            m.word_index(self.n)
        } else {
            self.lookup[m]
        }
    }

    pub(crate) fn vector(&self, field: &PrimeField, f: &Form) -> SparseVec {
        normalize_sparse(field, f.terms().iter().map(|(m, &c)| (self.index(m), c)).collect())
    }
}

/// Echelon bases of `I_0, ..., I_max` by the recurrence
/// `I_d = span(V I_{d-1} ∪ I_{d-1} V ∪ R_d)` (words) or
/// `I_d = span(V I_{d-1} ∪ R_d)` (commutative).
pub(crate) fn slice_bases(
    field: PrimeField,
    flavor: Flavor,
    n: usize,
    relations: &[Form],
    max: usize,
) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = Vec::with_capacity(max + 1);
    let mut prev_monomials: Vec<Monomial> = Vec::new();
    for d in 0..=max {
        let cols = monomial_count(flavor, n, d);
        let index = MonomialIndex::new(flavor, n, d);
        let mut basis = EchelonBasis::new(field, cols);
        if d > 0 {
            let prev = &out[d - 1];
            let push = |row: Vec<(usize, FieldElement)>, basis: &mut EchelonBasis| {
                if !basis.is_full() {
                    basis.insert(&normalize_sparse(&field, row));
                }
            };
            for row in prev.rows() {
                for x in 0..n as u16 {
                    let gen = Monomial::for_flavor(flavor, vec![x]);
                    let left: Vec<_> = row
                        .iter()
                        .map(|&(c, a)| (index.index(&gen.mul(&prev_monomials[c], flavor)), a))
                        .collect();
                    push(left, &mut basis);
                    if flavor.is_word_flavor() {
                        let right: Vec<_> = row
                            .iter()
                            .map(|&(c, a)| (index.index(&prev_monomials[c].mul(&gen, flavor)), a))
                            .collect();
                        push(right, &mut basis);
                    }
                }
            }
        }
        for f in relations.iter().filter(|f| f.degree() == d) {
            basis.insert(&index.vector(&field, f));
        }
        out.push(basis.into_rref());
        prev_monomials = enumerate_monomials(flavor, n, d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_monomial_ideal() {
        let f = PrimeField::default();
        let x2 = Form::from_words(&f, Flavor::Commutative, &[(1, &[0, 0])]);
        let dims: Vec<usize> = slice_bases(f, Flavor::Commutative, 2, &[x2], 3)
            .iter()
            .map(Matrix::n_rows)
            .collect();
        assert_eq!(dims, vec![0, 0, 1, 2]);
    }

    #[test]
    fn word_monomial_ideal() {
        let f = PrimeField::default();
        let xy = Form::from_words(&f, Flavor::Noncommutative, &[(1, &[0, 1])]);
        let dims: Vec<usize> = slice_bases(f, Flavor::Noncommutative, 2, &[xy], 3)
            .iter()
            .map(Matrix::n_rows)
            .collect();
        assert_eq!(dims, vec![0, 0, 1, 4]);
    }
}
