//! Exact arithmetic over `F_p` and the sparse elimination kernel that every
//! dimension count reduces to.

mod field;
mod matrix;

pub use field::{FieldElement, PrimeField};
pub use matrix::{dot, normalize_sparse, nullspace, rank, rref, EchelonBasis, Matrix, SparseVec};
