//! Explicit presentations from the strong-freeness and degree-3 arguments.

use crate::error::{Error, Result};
use crate::linalg::PrimeField;
use crate::presentation::{Flavor, Form, Presentation};

fn names(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

/// Generators `x_1..x_s, y_1..y_{n-s}` with `s = floor(n/2)` and the relations
/// `y_i x_j` (or `[x_i, y_j]` for `lie`).
fn bipartite(n: usize, flavor: Flavor) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::TooFewGenerators(n));
    }
    let f = PrimeField::default();
    let s = n / 2;
    let mut vars = names("x", 1..=s);
    vars.extend(names("y", 1..=n - s));
    let mut rels = Vec::new();
    for i in 0..n - s {
        for j in 0..s {
            let (x, y) = (j as u16, (s + i) as u16);
            let form = match flavor {
                Flavor::Lie => Form::from_words(&f, flavor, &[(1, &[x, y]), (1, &[y, x])]),
                _ => Form::from_words(&f, flavor, &[(1, &[y, x])]),
            };
            rels.push(form);
        }
    }
    Presentation::new(flavor, vars, rels, f)
}

/// The strongly free algebra `k<x, y>/(y_i x_j)` with `floor(n^2/4)` relations.
pub fn construct_strongly_free(n: usize) -> Result<Presentation> {
    bipartite(n, Flavor::Noncommutative)
}

/// The Lie-type analogue with relations `[x_i, y_j]`.
pub fn construct_lie_strongly_free(n: usize) -> Result<Presentation> {
    bipartite(n, Flavor::Lie)
}

/// Quadratic forms whose degree-3 multiples are independent (or, with
/// `spanning`, generate all of degree 3 when `n` is odd).
///
/// Even `n = 2s`: `x_i y_j` and `x_i x_j - y_i y_j`. Odd `n = 2s + 1` adds a
/// generator `y_0` and the forms `y_0 x_i + x_i y_0 + y_i y_0`,
/// `y_0 y_i + y_i y_0`, plus `y_0^2` when spanning.
pub fn construct_anick(n: usize, spanning: bool) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::TooFewGenerators(n));
    }
    let f = PrimeField::default();
    let fl = Flavor::Noncommutative;
    let s = n / 2;
    let odd = n % 2 == 1;
    let mut vars = names("x", 1..=s);
    if odd {
        vars.push("y0".into());
    }
    vars.extend(names("y", 1..=s));
    let x = |i: usize| i as u16;
    let y0 = s as u16;
    let y = |i: usize| (if odd { s + 1 + i } else { s + i }) as u16;
    let mut rels = Vec::new();
    for i in 0..s {
        for j in 0..s {
            rels.push(Form::from_words(&f, fl, &[(1, &[x(i), y(j)])]));
            rels.push(Form::from_words(&f, fl, &[(1, &[x(i), x(j)]), (-1, &[y(i), y(j)])]));
        }
    }
    if odd {
        for i in 0..s {
            rels.push(Form::from_words(
                &f,
                fl,
                &[(1, &[y0, x(i)]), (1, &[x(i), y0]), (1, &[y(i), y0])],
            ));
            rels.push(Form::from_words(&f, fl, &[(1, &[y0, y(i)]), (1, &[y(i), y0])]));
        }
        if spanning {
            rels.push(Form::from_words(&f, fl, &[(1, &[y0, y0])]));
        }
    }
    Presentation::new(fl, vars, rels, f)
}
