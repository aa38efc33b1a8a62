//! Hilbert series of finitely presented graded algebras over prime fields.
//!
//! Presentations come in three flavors (commutative, noncommutative and
//! Lie-type quadratic). The crate computes truncated Hilbert series by exact
//! linear algebra mod `p`, estimates generic series by random sampling, forms
//! quadratic (Koszul) duals and checks the minimal-series conjectures.

pub mod conjectures;
pub mod error;
pub mod format;
pub mod generic;
pub mod hilbert;
pub mod koszul;
pub mod linalg;
pub mod presentation;
pub mod series;

pub use error::{Error, Result};
pub use format::{parse_presentation, parse_presentation_over, serialize_presentation};
pub use hilbert::{
    algebra_type, degree3_span_test, hilbert_series, ideal_slices, lie_series, strongly_free_test,
    DegreeSliceBasis, HilbertResult,
};
pub use koszul::{annihilator, embed, koszul_dual, koszul_numerical_test, QuadraticSubspace};
pub use linalg::{FieldElement, Matrix, PrimeField};
pub use presentation::{Flavor, Form, Monomial, Presentation};
pub use series::{AlgebraType, PowerSeries};
