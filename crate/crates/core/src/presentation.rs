//! Monomials, homogeneous forms and presentations `F/(f_1, ..., f_r)` in the
//! commutative, free associative and Lie-type flavors.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{FieldElement, PrimeField};
use crate::series::AlgebraType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Commutative,
    Noncommutative,
    Lie,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Commutative => "commutative",
            Flavor::Noncommutative => "noncommutative",
            Flavor::Lie => "lie",
        }
    }

    pub fn parse(s: &str) -> Option<Flavor> {
        match s {
            "commutative" | "comm" => Some(Flavor::Commutative),
            "noncommutative" | "nc" => Some(Flavor::Noncommutative),
            "lie" => Some(Flavor::Lie),
            _ => None,
        }
    }

    /// Whether monomials are words (free associative / enveloping algebra).
    pub fn is_word_flavor(self) -> bool {
        !matches!(self, Flavor::Commutative)
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A monomial stored as a word of generator indices. Commutative monomials
/// are kept as nondecreasing words, which is the same data as an exponent
/// vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn word(letters: Vec<u16>) -> Self {
        Monomial(letters)
    }

    pub fn commutative(mut letters: Vec<u16>) -> Self {
        letters.sort_unstable();
        Monomial(letters)
    }

    pub fn for_flavor(flavor: Flavor, letters: Vec<u16>) -> Self {
        match flavor {
            Flavor::Commutative => Monomial::commutative(letters),
            _ => Monomial::word(letters),
        }
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    /// Exponent vector of length `n`.
    pub fn exponents(&self, n: usize) -> Vec<usize> {
        let mut e = vec![0; n];
        for &x in &self.0 {
            e[x as usize] += 1;
        }
        e
    }

    pub fn mul(&self, other: &Monomial, flavor: Flavor) -> Monomial {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Monomial::for_flavor(flavor, w)
    }

    /// Position among the `n^d` words of the same length (base-`n` digits).
    pub fn word_index(&self, n: usize) -> usize {
        self.0.iter().fold(0, |acc, &x| acc * n + x as usize)
    }
}

/// Degree first, then lexicographic in generator order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `d` in increasing order.
pub fn enumerate_monomials(flavor: Flavor, n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(n: usize, d: usize, min: u16, sorted: bool, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if cur.len() == d {
            out.push(Monomial(cur.clone()));
            return;
        }
        for x in min..n as u16 {
            cur.push(x);
            rec(n, d, if sorted { x } else { 0 }, sorted, cur, out);
            cur.pop();
        }
    }
    rec(n, d, 0, !flavor.is_word_flavor(), &mut cur, &mut out);
    out
}

/// Number of monomials of degree `d`: `n^d` for words, `C(n+d-1, d)` otherwise.
pub fn monomial_count(flavor: Flavor, n: usize, d: usize) -> usize {
    if flavor.is_word_flavor() {
        n.pow(d as u32)
    } else {
        let mut c: usize = 1;
        for k in 0..d {
            c = c * (n + k) / (k + 1);
        }
        c
    }
}

/// A homogeneous form: monomials of one degree with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    degree: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Form {
    pub fn zero(degree: usize) -> Self {
        Form {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a form, summing repeated monomials. Fails if the degrees differ.
    pub fn new<I>(field: &PrimeField, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let mut f = Form::zero(degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::Invalid(format!(
                    "non-homogeneous form: monomial of degree {} in a form of degree {degree}",
                    m.degree()
                )));
            }
            f.add_term(field, m, c);
        }
        Ok(f)
    }

    /// Convenience constructor from integer coefficients and index words.
    pub fn from_words(field: &PrimeField, flavor: Flavor, terms: &[(i64, &[u16])]) -> Self {
        let degree = terms.first().map_or(0, |t| t.1.len());
        Form::new(
            field,
            degree,
            terms
                .iter()
                .map(|&(c, w)| (Monomial::for_flavor(flavor, w.to_vec()), field.from_i64(c))),
        )
        .expect("homogeneous terms")
    }

    pub fn add_term(&mut self, field: &PrimeField, m: Monomial, c: FieldElement) {
        debug_assert_eq!(m.degree(), self.degree);
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `left * self * right`, canonicalized for the flavor.
    pub fn multiply(&self, left: &Monomial, right: &Monomial, flavor: Flavor, field: &PrimeField) -> Form {
        let mut out = Form::zero(self.degree + left.degree() + right.degree());
        for (m, &c) in &self.terms {
            out.add_term(field, left.mul(m, flavor).mul(right, flavor), c);
        }
        out
    }

    pub fn scale(&self, c: FieldElement, field: &PrimeField) -> Form {
        let mut out = Form::zero(self.degree);
        if c.is_zero() {
            return out;
        }
        for (m, &v) in &self.terms {
            out.terms.insert(m.clone(), field.mul(v, c));
        }
        out
    }
}

/// A finite presentation of a graded algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    flavor: Flavor,
    names: Vec<String>,
    relations: Vec<Form>,
    field: PrimeField,
}

impl Presentation {
    pub fn new(flavor: Flavor, names: Vec<String>, relations: Vec<Form>, field: PrimeField) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Invalid("a presentation needs at least one generator".into()));
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::Invalid("too many generators".into()));
        }
        if flavor != Flavor::Noncommutative && field.modulus() == 2 {
            return Err(Error::BadModulus(2));
        }
        let n = names.len();
        for (i, f) in relations.iter().enumerate() {
            if f.degree() < 2 {
                return Err(Error::LowDegree(f.degree()));
            }
            for m in f.terms().keys() {
                if m.letters().iter().any(|&x| x as usize >= n) {
                    return Err(Error::Invalid(format!("relation {i} uses an unknown generator")));
                }
                if flavor == Flavor::Commutative && m.letters().windows(2).any(|w| w[0] > w[1]) {
                    return Err(Error::Invalid(format!(
                        "relation {i} has a non-canonical commutative monomial"
                    )));
                }
            }
            if flavor == Flavor::Lie {
                check_lie_relation(f, i)?;
            }
        }
        Ok(Presentation {
            flavor,
            names,
            relations,
            field,
        })
    }

    /// Generators named `x1, ..., xn`.
    pub fn default_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[Form] {
        &self.relations
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn max_degree(&self) -> usize {
        self.relations.iter().map(Form::degree).max().unwrap_or(0)
    }

    pub fn is_quadratic(&self) -> bool {
        self.relations.iter().all(|f| f.degree() == 2)
    }

    /// Same generators and field, different relations.
    pub fn with_relations(&self, relations: Vec<Form>) -> Result<Self> {
        Presentation::new(self.flavor, self.names.clone(), relations, self.field)
    }

    /// The subsequence of relations at `keep` (in the given order).
    pub fn subsequence(&self, keep: &[usize]) -> Result<Self> {
        self.with_relations(keep.iter().map(|&i| self.relations[i].clone()).collect())
    }

    /// The presentation's type `(n; sorted relation degrees)`.
    pub fn presentation_type(&self) -> AlgebraType {
        AlgebraType::new(self.n(), self.relations.iter().map(Form::degree).collect())
            .expect("relations have degree >= 2")
    }

    /// Rewrites a Lie-type presentation over the free associative algebra,
    /// where `[a, b]` already stands for `ab + ba`.
    pub fn expand_lie(&self) -> Result<Presentation> {
        if self.flavor != Flavor::Lie {
            return Err(Error::FlavorMismatch {
                expected: "lie",
                found: self.flavor.name(),
            });
        }
        Ok(Presentation {
            flavor: Flavor::Noncommutative,
            names: self.names.clone(),
            relations: self.relations.clone(),
            field: self.field,
        })
    }

    /// Word-flavored view used by the free-algebra engine (identity for NC).
    pub fn as_associative(&self) -> Result<Presentation> {
        match self.flavor {
            Flavor::Noncommutative => Ok(self.clone()),
            Flavor::Lie => self.expand_lie(),
            Flavor::Commutative => Err(Error::FlavorMismatch {
                expected: "noncommutative or lie",
                found: "commutative",
            }),
        }
    }
}

/// Lie-type relations are quadratic with `coeff(x_j x_l) == coeff(x_l x_j)`.
fn check_lie_relation(f: &Form, index: usize) -> Result<()> {
    if f.degree() != 2 {
        return Err(Error::NotLieRelation(format!("relation {index} has degree {}", f.degree())));
    }
    for (m, c) in f.terms() {
        let w = m.letters();
        let swapped = Monomial::word(vec![w[1], w[0]]);
        if f.coeff(&swapped) != *c {
            return Err(Error::NotLieRelation(format!(
                "relation {index}: coefficients of {:?} and {:?} differ",
                w,
                swapped.letters()
            )));
        }
    }
    Ok(())
}

/// Free function form of [`Presentation::presentation_type`].
pub fn type_of_presentation(p: &Presentation) -> AlgebraType {
    p.presentation_type()
}

/// Free function form of [`Presentation::expand_lie`].
pub fn expand_lie(p: &Presentation) -> Result<Presentation> {
    p.expand_lie()
}
