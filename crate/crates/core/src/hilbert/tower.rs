//! Degree-by-degree quotient of the free associative algebra.
//!
//! `A_d = (A_{d-1} ⊗ V) / S_d`, where `S_d` is spanned by the images of
//! `b · f` for every relation `f` of degree `e <= d` and every basis element
//! `b` of `A_{d-e}`. Coordinates of `A_{d-1} ⊗ V` are `b * n + i`; the free
//! columns of the rref of `S_d` form the basis of `A_d`.

use crate::linalg::{normalize_sparse, EchelonBasis, FieldElement, PrimeField, SparseVec};
use crate::presentation::Form;

type Word = Vec<u16>;

#[derive(Debug, Clone)]
pub(crate) struct Tower {
    field: PrimeField,
    n: usize,
    /// Relations as `(coefficient, word)` lists, grouped by degree.
    relations: Vec<Vec<Vec<(FieldElement, Word)>>>,
    dims: Vec<usize>,
    /// `proj[d][b * n + i]` is `b · x_i` in the basis of `A_d` (`proj[0]` unused).
    proj: Vec<Vec<SparseVec>>,
}

impl Tower {
    pub(crate) fn new(field: PrimeField, n: usize, relations: &[Form]) -> Self {
        let max = relations.iter().map(Form::degree).max().unwrap_or(0);
        let mut grouped = vec![Vec::new(); max + 1];
        for f in relations.iter().filter(|f| !f.is_zero()) {
            let terms = f
                .terms()
                .iter()
                .map(|(m, &c)| (c, m.letters().to_vec()))
                .collect();
            grouped[f.degree()].push(terms);
        }
        Tower {
            field,
            n,
            relations: grouped,
            dims: vec![1],
            proj: vec![Vec::new()],
        }
    }

    pub(crate) fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub(crate) fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// `v · x_i` for `v` in `A_k`, landing in `A_{k+1}`.
    pub(crate) fn right_mul(&self, v: &SparseVec, k: usize, i: u16) -> SparseVec {
        let proj = &self.proj[k + 1];
        let f = &self.field;
        let mut acc = Vec::new();
        for &(b, c) in v {
            for &(j, a) in &proj[b * self.n + i as usize] {
                acc.push((j, f.mul(a, c)));
            }
        }
        normalize_sparse(f, acc)
    }

    /// Normal form in `A_{k + |w|}` of `v · w` for `v` in `A_k`.
    pub(crate) fn chain(&self, v: SparseVec, k: usize, w: &[u16]) -> SparseVec {
        let mut v = v;
        for (step, &i) in w.iter().enumerate() {
            if v.is_empty() {
                break;
            }
            v = self.right_mul(&v, k + step, i);
        }
        v
    }

    /// Normal form of a homogeneous form in `A_{deg}`.
    pub(crate) fn normal_form(&mut self, f: &Form) -> SparseVec {
        self.extend_to(f.degree());
        let mut acc = Vec::new();
        for (m, &c) in f.terms() {
            let unit = vec![(0, self.field.one())];
            for (j, a) in self.chain(unit, 0, m.letters()) {
                acc.push((j, self.field.mul(a, c)));
            }
        }
        normalize_sparse(&self.field, acc)
    }

    pub(crate) fn extend_to(&mut self, d: usize) {
        while self.top() < d {
            self.push_degree();
        }
    }

    fn push_degree(&mut self) {
        let d = self.dims.len();
        let prev = self.dims[d - 1];
        let n = self.n;
        let f = self.field;
        if prev == 0 {
            self.dims.push(0);
            self.proj.push(Vec::new());
            return;
        }
        let cols = prev * n;
        let mut s = EchelonBasis::new(f, cols);
        for e in 2..=d.min(self.relations.len().saturating_sub(1)) {
            for rel in &self.relations[e] {
                for b in 0..self.dims[d - e] {
                    let mut acc = Vec::new();
                    for (c, w) in rel {
                        let head = self.chain(vec![(b, f.one())], d - e, &w[..e - 1]);
                        let last = w[e - 1] as usize;
                        for (j, a) in head {
                            acc.push((j * n + last, f.mul(a, *c)));
                        }
                    }
                    let row = normalize_sparse(&f, acc);
                    if !row.is_empty() {
                        s.insert(&row);
                    }
                    if s.is_full() {
                        break;
                    }
                }
            }
        }
        let rref = s.into_rref();
        let mut pivot_row = vec![usize::MAX; cols];
        for (k, row) in rref.rows().iter().enumerate() {
            pivot_row[row[0].0] = k;
        }
        let mut free_index = vec![usize::MAX; cols];
        let mut dim = 0;
        for c in 0..cols {
            if pivot_row[c] == usize::MAX {
                free_index[c] = dim;
                dim += 1;
            }
        }
        let proj = (0..cols)
            .map(|c| match pivot_row[c] {
                usize::MAX => vec![(free_index[c], f.one())],
                k => rref.rows()[k][1..]
                    .iter()
                    .map(|&(j, a)| (free_index[j], f.neg(a)))
                    .collect(),
            })
            .collect();
        self.dims.push(dim);
        self.proj.push(proj);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{Flavor, Form};

    #[test]
    fn free_algebra_dims() {
        let mut t = Tower::new(PrimeField::default(), 2, &[]);
        t.extend_to(4);
        assert_eq!(t.dims(), &[1, 2, 4, 8, 16]);
    }

    #[test]
    fn monomial_relation() {
        let f = PrimeField::default();
        let xy = Form::from_words(&f, Flavor::Noncommutative, &[(1, &[0, 1])]);
        let mut t = Tower::new(f, 2, std::slice::from_ref(&xy));
        t.extend_to(4);
        // words avoiding xy: y^a x^b
        assert_eq!(t.dims(), &[1, 2, 3, 4, 5]);
        assert!(t.normal_form(&xy).is_empty());
    }

    #[test]
    fn commutator_gives_polynomial_ring() {
        let f = PrimeField::default();
        let c = Form::from_words(&f, Flavor::Noncommutative, &[(1, &[0, 1]), (-1, &[1, 0])]);
        let mut t = Tower::new(f, 2, &[c]);
        t.extend_to(5);
        assert_eq!(t.dims(), &[1, 2, 3, 4, 5, 6]);
        let yx = Form::from_words(&f, Flavor::Noncommutative, &[(1, &[0, 1, 0]), (-1, &[1, 0, 0])]);
        assert!(t.normal_form(&yx).is_empty());
    }

    #[test]
    fn cubic_relation() {
        let f = PrimeField::default();
        let r = Form::from_words(&f, Flavor::Noncommutative, &[(1, &[0, 0, 0])]);
        let mut t = Tower::new(f, 1, &[r]);
        t.extend_to(5);
        assert_eq!(t.dims(), &[1, 1, 1, 0, 0, 0]);
    }
}
