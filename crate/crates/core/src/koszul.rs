//! Quadratic duality: relation spaces as subspaces of `V ⊗ V`, their
//! annihilators, and the dual presentation read back from them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::hilbert_series;
use crate::linalg::{normalize_sparse, Matrix, PrimeField, SparseVec};
use crate::presentation::{Flavor, Form, Monomial, Presentation};
use crate::series::PowerSeries;

/// A subspace of `V ⊗ V`; column `i * n + j` is `e_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSubspace {
    pub n: usize,
    pub flavor: Flavor,
    pub basis: Matrix,
}

impl QuadraticSubspace {
    pub fn new(n: usize, flavor: Flavor, rows: Matrix) -> Self {
        QuadraticSubspace {
            n,
            flavor,
            basis: rows.rref(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.n_rows()
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }
}

fn antisymmetrizers(f: &PrimeField, n: usize) -> Vec<SparseVec> {
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rows.push(vec![(i * n + j, f.one()), (j * n + i, f.neg(f.one()))]);
        }
    }
    rows
}

/// Embeds the quadratic relation space of `p` into `V ⊗ V`.
///
/// Commutative relations contribute `c_ii e_ii + (c_ij / 2)(e_ij + e_ji)`
/// alongside all antisymmetrizers `e_ij - e_ji`; word and Lie relations map
/// coefficient by coefficient.
pub fn embed(p: &Presentation) -> Result<QuadraticSubspace> {
    if let Some(i) = p.relations().iter().position(|f| f.degree() != 2) {
        return Err(Error::NotQuadratic(i));
    }
    let f = p.field();
    let n = p.n();
    let mut rows = Vec::new();
    if p.flavor() == Flavor::Commutative {
        rows.extend(antisymmetrizers(&f, n));
        let half = f.half();
        for rel in p.relations() {
            let mut row = Vec::new();
            for (m, &c) in rel.terms() {
                let (i, j) = (m.letters()[0] as usize, m.letters()[1] as usize);
                if i == j {
                    row.push((i * n + i, c));
                } else {
                    let h = f.mul(c, half);
                    row.push((i * n + j, h));
                    row.push((j * n + i, h));
                }
            }
            rows.push(normalize_sparse(&f, row));
        }
    } else {
        for rel in p.relations() {
            rows.push(normalize_sparse(
                &f,
                rel.terms().iter().map(|(m, &c)| (m.word_index(n), c)).collect(),
            ));
        }
    }
    Ok(QuadraticSubspace::new(n, p.flavor(), Matrix::from_rows(f, n * n, rows)))
}

/// `U^0` under the pairing `<e_ij, e*_kl> = δ_ik δ_jl`; commutative and Lie
/// flavors swap.
pub fn annihilator(u: &QuadraticSubspace) -> QuadraticSubspace {
    let flavor = match u.flavor {
        Flavor::Commutative => Flavor::Lie,
        Flavor::Lie => Flavor::Commutative,
        Flavor::Noncommutative => Flavor::Noncommutative,
    };
    QuadraticSubspace {
        n: u.n,
        flavor,
        basis: u.basis.nullspace(),
    }
}

fn word_form(f: &PrimeField, n: usize, row: &SparseVec) -> Form {
    let mut form = Form::zero(2);
    for &(c, a) in row {
        let m = Monomial::word(vec![(c / n) as u16, (c % n) as u16]);
        form.add_term(f, m, a);
    }
    form
}

/// Reads a subspace back as relations in its own flavor.
pub fn read_back(u: &QuadraticSubspace, names: Vec<String>) -> Result<Presentation> {
    let f = u.field();
    let n = u.n;
    let relations = match u.flavor {
        Flavor::Noncommutative | Flavor::Lie => {
            u.basis.rows().iter().map(|r| word_form(&f, n, r)).collect()
        }
        Flavor::Commutative => {
            // Quotient by the antisymmetrizers: keep the symmetric part.
            let half = f.half();
            let sym: Vec<SparseVec> = u
                .basis
                .rows()
                .iter()
                .map(|r| {
                    let mut out = Vec::new();
                    for &(c, a) in r {
                        let (i, j) = (c / n, c % n);
                        let h = f.mul(a, half);
                        out.push((i * n + j, h));
                        out.push((j * n + i, h));
                    }
                    normalize_sparse(&f, out)
                })
                .collect();
            // Polynomial coordinates: column i*n + j (i <= j) holds the
            // coefficient of x_i x_j, rref'd so each relation is monic.
            let two = f.from_i64(2);
            let poly: Vec<SparseVec> = Matrix::from_rows(f, n * n, sym)
                .rref()
                .rows()
                .iter()
                .map(|r| {
                    let out = r
                        .iter()
                        .filter(|&&(c, _)| c / n <= c % n)
                        .map(|&(c, a)| (c, if c / n == c % n { a } else { f.mul(two, a) }))
                        .collect();
                    normalize_sparse(&f, out)
                })
                .collect();
            Matrix::from_rows(f, n * n, poly)
                .rref()
                .rows()
                .iter()
                .map(|r| {
                    let mut form = Form::zero(2);
                    for &(c, a) in r {
                        let m = Monomial::commutative(vec![(c / n) as u16, (c % n) as u16]);
                        form.add_term(&f, m, a);
                    }
                    form
                })
                .collect()
        }
    };
    Presentation::new(u.flavor, names, relations, f)
}

/// The quadratic dual `A^!`, on generators with the same names.
pub fn koszul_dual(p: &Presentation) -> Result<Presentation> {
    let u = embed(p)?;
    read_back(&annihilator(&u), p.names().to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulCheck {
    pub passes: bool,
    pub degree: usize,
    pub series: PowerSeries,
    pub dual_series: PowerSeries,
    pub product: PowerSeries,
}

/// Whether `A(z) A^!(-z) = 1` through `max`. A failure proves `A` is not
/// Koszul; a pass is only a bounded necessary condition.
pub fn koszul_numerical_test(p: &Presentation, max: usize) -> Result<KoszulCheck> {
    let dual = koszul_dual(p)?;
    let series = hilbert_series(p, max).series;
    let dual_series = hilbert_series(&dual, max).series;
    let product = series.mul(&dual_series.negate_variable());
    Ok(KoszulCheck {
        passes: product == PowerSeries::one(max),
        degree: max,
        series,
        dual_series,
        product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_presentation;

    fn parse(s: &str) -> Presentation {
        parse_presentation(s).unwrap()
    }

    #[test]
    fn embed_examples() {
        let u = embed(&parse("flavor commutative\nvars x, y\n")).unwrap();
        assert_eq!(u.dim(), 1);
        let u = embed(&parse("flavor noncommutative\nvars x, y\nrel x*x\n")).unwrap();
        assert_eq!(u.basis.rows(), &[vec![(0, u.field().one())]]);
        let u = embed(&parse("flavor lie\nvars a, b, c\nrel b*b\nrel [a,b] - c*c\nrel [a,c]\n")).unwrap();
        assert_eq!(u.dim(), 3);
    }

    #[test]
    fn annihilator_examples() {
        let u = embed(&parse("flavor noncommutative\nvars x, y\nrel x*x\n")).unwrap();
        let a = annihilator(&u);
        let f = u.field();
        let one = f.one();
        assert_eq!(
            a.basis,
            Matrix::from_rows(f, 4, vec![vec![(1, one)], vec![(2, one)], vec![(3, one)]])
        );
        let zero = embed(&parse("flavor noncommutative\nvars x, y\n")).unwrap();
        assert_eq!(annihilator(&zero).dim(), 4);
    }

    #[test]
    fn polynomial_ring_dual_is_exterior() {
        let d = koszul_dual(&parse("flavor commutative\nvars x, y\n")).unwrap();
        let expected = parse("flavor lie\nvars x, y\nrel x*x\nrel y*y\nrel [x,y]\n");
        assert_eq!(d.flavor(), Flavor::Lie);
        assert_eq!(embed(&d).unwrap(), embed(&expected).unwrap());
    }

    #[test]
    fn involution_on_small_examples() {
        for text in [
            "flavor commutative\nvars x, y, z\nrel x*y + 3*z*z\nrel x*x - y*z\n",
            "flavor lie\nvars a, b, c\nrel b*b\nrel [a,b] - c*c\nrel [a,c]\n",
            "flavor noncommutative\nvars x, y\nrel x*y - 2*y*x\n",
        ] {
            let p = parse(text);
            let dd = koszul_dual(&koszul_dual(&p).unwrap()).unwrap();
            assert_eq!(dd.flavor(), p.flavor());
            assert_eq!(embed(&dd).unwrap(), embed(&p).unwrap(), "{text}");
        }
    }

    #[test]
    fn numerical_test_on_polynomial_ring() {
        let p = parse("flavor commutative\nvars x, y, z\n");
        assert!(koszul_numerical_test(&p, 6).unwrap().passes);
    }
}
