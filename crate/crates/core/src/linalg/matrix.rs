use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::field::{FieldElement, PrimeField};

/// A sparse vector: strictly increasing column indices, no stored zeros.
pub type SparseVec = Vec<(usize, FieldElement)>;

const NO_PIVOT: usize = usize::MAX;

/// Sparse row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    cols: usize,
    rows: Vec<SparseVec>,
}

/// Sorts entries, merges duplicates and drops zeros.
pub fn normalize_sparse(field: &PrimeField, mut v: Vec<(usize, FieldElement)>) -> SparseVec {
    v.sort_by_key(|&(c, _)| c);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (c, a) in v {
        match out.last_mut() {
            Some((lc, la)) if *lc == c => *la = field.add(*la, a),
            _ => out.push((c, a)),
        }
    }
    out.retain(|&(_, a)| !a.is_zero());
    out
}

impl Matrix {
    pub fn zeros(field: PrimeField, cols: usize) -> Self {
        Matrix {
            field,
            cols,
            rows: Vec::new(),
        }
    }

    /// Builds a matrix from arbitrary (unsorted, possibly duplicated) row entries.
    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<Vec<(usize, FieldElement)>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|r| {
                let r = normalize_sparse(&field, r);
                assert!(r.last().is_none_or(|&(c, _)| c < cols), "column out of range");
                r
            })
            .collect();
        Matrix { field, cols, rows }
    }

    pub fn from_dense(field: PrimeField, cols: usize, rows: &[Vec<i64>]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols);
                r.iter()
                    .enumerate()
                    .map(|(c, &v)| (c, field.from_i64(v)))
                    .collect()
            })
            .collect();
        Matrix::from_rows(field, cols, rows)
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Matrix {
            field,
            cols: n,
            rows: (0..n).map(|i| vec![(i, FieldElement::ONE)]).collect(),
        }
    }

    pub fn push_row(&mut self, row: Vec<(usize, FieldElement)>) {
        let row = normalize_sparse(&self.field, row);
        assert!(row.last().is_none_or(|&(c, _)| c < self.cols));
        self.rows.push(row);
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    pub fn to_dense(&self) -> Vec<Vec<FieldElement>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![FieldElement::ZERO; self.cols];
                for &(c, a) in r {
                    d[c] = a;
                }
                d
            })
            .collect()
    }

    /// `M · v` for a sparse column vector.
    pub fn mul_vec(&self, v: &SparseVec) -> Vec<FieldElement> {
        let f = &self.field;
        self.rows
            .iter()
            .map(|r| dot(f, r, v))
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        for r in &self.rows {
            basis.insert(r);
        }
        basis.rank()
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> Matrix {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        for r in &self.rows {
            basis.insert(r);
        }
        basis.into_rref()
    }

    /// Canonical (rref) basis of `{v : M v = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let rref = self.rref();
        let f = self.field;
        let mut pivot_of = vec![NO_PIVOT; self.cols];
        for (i, r) in rref.rows.iter().enumerate() {
            pivot_of[r[0].0] = i;
        }
        // For a free column j, e_j - sum_i rref[i][j] e_{pivot(i)} is in the kernel.
        let mut kernel: Vec<Vec<(usize, FieldElement)>> = Vec::new();
        let mut free_index = vec![NO_PIVOT; self.cols];
        for j in 0..self.cols {
            if pivot_of[j] == NO_PIVOT {
                free_index[j] = kernel.len();
                kernel.push(vec![(j, FieldElement::ONE)]);
            }
        }
        for r in &rref.rows {
            let pivot = r[0].0;
            for &(j, a) in &r[1..] {
                let k = free_index[j];
                debug_assert!(k != NO_PIVOT);
                kernel[k].push((pivot, f.neg(a)));
            }
        }
        Matrix::from_rows(f, self.cols, kernel).rref()
    }

    /// Stacks the rows of `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Matrix {
            field: self.field,
            cols: self.cols,
            rows,
        }
    }
}

pub fn dot(f: &PrimeField, a: &SparseVec, b: &SparseVec) -> FieldElement {
    let (mut i, mut j) = (0, 0);
    let mut acc = FieldElement::ZERO;
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = f.add(acc, f.mul(a[i].1, b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}

pub fn nullspace(m: &Matrix) -> Matrix {
    m.nullspace()
}

/// Scratch space for reducing one vector against a set of pivot rows.
///
/// Starts sparse (a min-heap of touched columns) and switches to a linear
/// column scan once more than a quarter of the columns have been touched.
#[derive(Debug, Clone)]
struct Reducer {
    vals: Vec<u64>,
    mark: Vec<bool>,
    touched: Vec<usize>,
}

impl Reducer {
    fn new(cols: usize) -> Self {
        Reducer {
            vals: vec![0; cols],
            mark: vec![false; cols],
            touched: Vec::new(),
        }
    }

    #[inline]
    fn touch(&mut self, c: usize, heap: &mut Option<BinaryHeap<Reverse<usize>>>) {
        if !self.mark[c] {
            self.mark[c] = true;
            self.touched.push(c);
            if let Some(h) = heap.as_mut() {
                h.push(Reverse(c));
            }
        }
    }

    /// Fully reduces `v`; the result has no entries at pivot columns other
    /// than `keep` (the row's own pivot during back-substitution).
    fn reduce(
        &mut self,
        field: &PrimeField,
        rows: &[SparseVec],
        pivot_row: &[usize],
        v: &[(usize, FieldElement)],
        keep: Option<usize>,
    ) -> SparseVec {
        let p = field.modulus();
        let cols = self.vals.len();
        let dense_threshold = (cols / 4).max(1);
        let mut heap = Some(BinaryHeap::with_capacity(v.len()));
        for &(c, a) in v {
            self.vals[c] = (self.vals[c] + a.value()) % p;
            self.touch(c, &mut heap);
        }
        let mut out = Vec::new();
        let mut scan = 0usize;
        loop {
            let c = match heap.as_mut() {
                Some(h) => match h.pop() {
                    Some(Reverse(c)) => c,
                    None => break,
                },
                None => {
                    while scan < cols && self.vals[scan] == 0 {
                        scan += 1;
                    }
                    if scan == cols {
                        break;
                    }
                    scan += 1;
                    scan - 1
                }
            };
            let val = self.vals[c];
            if val == 0 {
                continue;
            }
            let pr = pivot_row[c];
            if pr == NO_PIVOT || keep == Some(c) {
                out.push((c, FieldElement(val)));
                continue;
            }
            let row = &rows[pr];
            // row[0] is (c, 1)
            self.vals[c] = 0;
            let factor = p - val;
            for &(j, a) in &row[1..] {
                self.vals[j] = (self.vals[j] + factor * a.value()) % p;
                if !self.mark[j] {
                    self.mark[j] = true;
                    self.touched.push(j);
                    if let Some(h) = heap.as_mut() {
                        h.push(Reverse(j));
                    }
                }
            }
            if heap.is_some() && self.touched.len() > dense_threshold {
                heap = None;
                scan = c + 1;
            }
        }
        for &c in &self.touched {
            self.vals[c] = 0;
            self.mark[c] = false;
        }
        self.touched.clear();
        out
    }
}

/// An incrementally built row-echelon basis.
///
/// Each inserted row is fully reduced against the current pivots and
/// normalized so its leading entry is 1. Pivot choice is the first nonzero
/// column of the reduced row.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: PrimeField,
    cols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<usize>,
    reducer: Reducer,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        EchelonBasis {
            field,
            cols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; cols],
            reducer: Reducer::new(cols),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c] != NO_PIVOT
    }

    /// Normal form of `v` modulo the row space (entries only at free columns).
    pub fn reduce(&mut self, v: &[(usize, FieldElement)]) -> SparseVec {
        self.reducer
            .reduce(&self.field, &self.rows, &self.pivot_row, v, None)
    }

    pub fn contains(&mut self, v: &[(usize, FieldElement)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns whether it was independent of the existing rows.
    pub fn insert(&mut self, v: &[(usize, FieldElement)]) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let f = self.field;
        let inv = f.inv(r[0].1);
        for e in r.iter_mut() {
            e.1 = f.mul(e.1, inv);
        }
        self.pivot_row[r[0].0] = self.rows.len();
        self.rows.push(r);
        true
    }

    /// Back-substitutes and returns the rref with rows sorted by pivot.
    pub fn into_rref(mut self) -> Matrix {
        for i in (0..self.rows.len()).rev() {
            let pivot = self.rows[i][0].0;
            let row = std::mem::take(&mut self.rows[i]);
            let reduced = self.reducer.reduce(
                &self.field,
                &self.rows,
                &self.pivot_row,
                &row,
                Some(pivot),
            );
            self.rows[i] = reduced;
        }
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        Matrix {
            field: self.field,
            cols: self.cols,
            rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(f(5), 0).rank(), 0);
        assert_eq!(Matrix::identity(f(5), 3).rank(), 3);
        let m = Matrix::from_dense(f(7), 3, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_examples() {
        let m = Matrix::from_dense(f(7), 2, &[vec![2, 4], vec![1, 2]]);
        assert_eq!(m.rref(), Matrix::from_dense(f(7), 2, &[vec![1, 2]]));
        let id = Matrix::identity(f(7), 4);
        assert_eq!(id.rref(), id);
        let m = Matrix::from_dense(f(7), 2, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.rref(), Matrix::identity(f(7), 2));
    }

    #[test]
    fn nullspace_examples() {
        let m = Matrix::from_dense(f(5), 2, &[vec![1, 0]]);
        assert_eq!(m.nullspace(), Matrix::from_dense(f(5), 2, &[vec![0, 1]]));
        let m = Matrix::from_dense(f(7), 2, &[vec![1, 2], vec![3, 1]]);
        assert_eq!(m.nullspace().n_rows(), 0);
        let m = Matrix::from_dense(f(7), 3, &[vec![1, 1, 1]]);
        let k = m.nullspace();
        assert_eq!(k.n_rows(), 2);
        for r in k.rows() {
            assert!(m.mul_vec(r).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn reduce_gives_normal_form() {
        let field = f(11);
        let mut b = EchelonBasis::new(field, 3);
        assert!(b.insert(&[(0, field.one()), (1, field.one())]));
        assert!(!b.insert(&[(0, field.from_i64(2)), (1, field.from_i64(2))]));
        let nf = b.reduce(&[(0, field.one())]);
        assert_eq!(nf, vec![(1, field.from_i64(-1))]);
    }

    #[test]
    fn dense_fallback_matches_sparse() {
        // 40 columns, rows that fill in quickly
        let field = f(101);
        let rows: Vec<Vec<i64>> = (0..30)
            .map(|i| (0..40).map(|j| ((i * 7 + j * 13 + i * j) % 5) as i64).collect())
            .collect();
        let m = Matrix::from_dense(field, 40, &rows);
        let r = m.rref();
        assert_eq!(r.rank(), r.n_rows());
        assert_eq!(r.rref(), r);
    }
}
