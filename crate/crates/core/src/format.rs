//! The line-oriented presentation file format.
//!
//! ```text
//! # comment
//! flavor lie
//! prime 2147483647
//! vars a, b, c
//! rel b*b
//! rel [a,b] - c*c
//! rel [a,c]
//! ```
//!
//! `prime` is optional. Coefficients are integers or `p/q` rationals reduced
//! mod the prime; `[x,y]` (Lie flavor only) stands for `xy + yx`.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{FieldElement, PrimeField};
use crate::presentation::{Flavor, Form, Monomial, Presentation};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LBracket,
    RBracket,
    Comma,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => out.push((Tok::Plus, col)),
            '-' => out.push((Tok::Minus, col)),
            '*' => out.push((Tok::Star, col)),
            '/' => out.push((Tok::Slash, col)),
            '[' => out.push((Tok::LBracket, col)),
            ']' => out.push((Tok::RBracket, col)),
            ',' => out.push((Tok::Comma, col)),
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Num(s.parse().expect("digits")), col));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            other => return Err(err(line, col, format!("malformed token {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct RelParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    vars: &'a HashMap<String, u16>,
    flavor: Flavor,
    field: PrimeField,
}

/// One parsed term: coefficient and word (brackets already expanded).
struct Term {
    coeff: FieldElement,
    words: Vec<(FieldElement, Vec<u16>)>,
    degree: usize,
    col: usize,
}

impl<'a> RelParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        err(self.line, self.col(), msg)
    }

    fn ident(&mut self) -> Result<u16> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Ident(name)) => self
                .vars
                .get(&name)
                .copied()
                .ok_or_else(|| err(self.line, col, format!("unknown generator {name:?}"))),
            _ => Err(err(self.line, col, "expected a generator name")),
        }
    }

    fn number(&mut self, first: BigInt) -> Result<FieldElement> {
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let col = self.col();
            match self.bump() {
                Some(Tok::Num(d)) => self
                    .field
                    .from_ratio(&first, &d)
                    .map_err(|e| err(self.line, col, e.to_string())),
                _ => Err(err(self.line, col, "expected a denominator")),
            }
        } else {
            Ok(self.field.from_bigint(&first))
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let f = self.field;
        let col = self.col();
        let mut coeff = if negative { f.neg(f.one()) } else { f.one() };
        let mut word: Vec<u16> = Vec::new();
        let mut bracket: Option<(u16, u16)> = None;
        loop {
            let fcol = self.col();
            match self.bump() {
                Some(Tok::Num(v)) => {
                    let c = self.number(v)?;
                    coeff = f.mul(coeff, c);
                }
                Some(Tok::Ident(_)) => {
                    self.pos -= 1;
                    word.push(self.ident()?);
                }
                Some(Tok::LBracket) => {
                    if self.flavor != Flavor::Lie {
                        return Err(err(self.line, fcol, "brackets are only allowed in flavor lie"));
                    }
                    if bracket.is_some() {
                        return Err(err(self.line, fcol, "at most one bracket per term"));
                    }
                    let a = self.ident()?;
                    if self.bump() != Some(Tok::Comma) {
                        return Err(self.error("expected ',' inside bracket"));
                    }
                    let b = self.ident()?;
                    if self.bump() != Some(Tok::RBracket) {
                        return Err(self.error("expected ']'"));
                    }
                    bracket = Some((a, b));
                }
                _ => return Err(err(self.line, fcol, "expected a coefficient, generator or bracket")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.bump();
            } else {
                break;
            }
        }
        let (words, degree) = match bracket {
            Some((a, b)) => {
                if !word.is_empty() {
                    return Err(err(self.line, col, "a bracket cannot be multiplied by generators"));
                }
                (vec![(f.one(), vec![a, b]), (f.one(), vec![b, a])], 2)
            }
            None => {
                let d = word.len();
                (vec![(f.one(), word)], d)
            }
        };
        Ok(Term {
            coeff,
            words,
            degree,
            col,
        })
    }

    fn relation(&mut self) -> Result<Form> {
        let f = self.field;
        let mut terms = Vec::new();
        let mut negative = false;
        if let Some(Tok::Minus | Tok::Plus) = self.peek() {
            negative = self.bump() == Some(Tok::Minus);
        }
        loop {
            terms.push(self.term(negative)?);
            match self.bump() {
                None => break,
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.error("expected '+' or '-'"));
                }
            }
        }
        let degree = terms[0].degree;
        if let Some(t) = terms.iter().find(|t| t.degree != degree) {
            return Err(err(self.line, t.col, "non-homogeneous relation"));
        }
        if degree < 2 {
            return Err(err(self.line, terms[0].col, "relations must have degree at least 2"));
        }
        let mut form = Form::zero(degree);
        for t in terms {
            for (c, w) in t.words {
                form.add_term(&f, Monomial::for_flavor(self.flavor, w), f.mul(c, t.coeff));
            }
        }
        Ok(form)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses one presentation from the file format.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    parse_presentation_over(text, None)
}

/// Like [`parse_presentation`], but coefficients are reduced in `field`
/// whatever the `prime` line says.
pub fn parse_presentation_over(text: &str, field: Option<PrimeField>) -> Result<Presentation> {
    let forced = field;
    let mut flavor: Option<Flavor> = None;
    let mut field = forced.unwrap_or_default();
    let mut names: Option<Vec<String>> = None;
    let mut vars: HashMap<String, u16> = HashMap::new();
    let mut relations = Vec::new();
    let mut saw_rel = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed, ""),
        };
        let rest_col = indent + keyword.len() + 1;
        let value = rest.trim();
        match keyword {
            "flavor" => {
                if flavor.is_some() {
                    return Err(err(line, 1 + indent, "flavor given twice"));
                }
                flavor = Some(
                    Flavor::parse(value)
                        .ok_or_else(|| err(line, rest_col, format!("unknown flavor {value:?}")))?,
                );
            }
            "prime" => {
                if saw_rel {
                    return Err(err(line, 1 + indent, "prime must precede the relations"));
                }
                let p: u64 = value
                    .parse()
                    .map_err(|_| err(line, rest_col, format!("bad prime {value:?}")))?;
                let declared = PrimeField::new(p).map_err(|e| err(line, rest_col, e.to_string()))?;
                field = forced.unwrap_or(declared);
            }
            "vars" => {
                if names.is_some() {
                    return Err(err(line, 1 + indent, "vars given twice"));
                }
                let list: Vec<String> = value.split(',').map(|s| s.trim().to_string()).collect();
                for (i, name) in list.iter().enumerate() {
                    if !is_identifier(name) {
                        return Err(err(line, rest_col, format!("bad generator name {name:?}")));
                    }
                    if vars.insert(name.clone(), i as u16).is_some() {
                        return Err(err(line, rest_col, format!("generator {name:?} repeated")));
                    }
                }
                names = Some(list);
            }
            "rel" => {
                saw_rel = true;
                let fl = flavor.ok_or_else(|| err(line, 1 + indent, "flavor must precede the relations"))?;
                if names.is_none() {
                    return Err(err(line, 1 + indent, "vars must precede the relations"));
                }
                let offset = rest_col + (rest.len() - rest.trim_start().len());
                let toks = tokenize(value, line, offset)?;
                if toks.is_empty() {
                    return Err(err(line, rest_col, "empty relation"));
                }
                let mut parser = RelParser {
                    toks,
                    pos: 0,
                    line,
                    end_col: offset + value.len(),
                    vars: &vars,
                    flavor: fl,
                    field,
                };
                relations.push((line, parser.relation()?));
            }
            other => return Err(err(line, 1 + indent, format!("unknown keyword {other:?}"))),
        }
    }
    let flavor = flavor.ok_or_else(|| err(1, 1, "missing flavor line"))?;
    let names = names.ok_or_else(|| err(1, 1, "missing vars line"))?;
    // Lie-span and other structural checks, reported at the offending line.
    for (line, rel) in &relations {
        Presentation::new(flavor, names.clone(), vec![rel.clone()], field)
            .map_err(|e| err(*line, 1, e.to_string()))?;
    }
    Presentation::new(flavor, names, relations.into_iter().map(|r| r.1).collect(), field)
}

fn write_coeff(out: &mut String, c: i64, first: bool) {
    let mag = c.unsigned_abs();
    match (first, c < 0) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    if mag != 1 {
        let _ = write!(out, "{mag}*");
    }
}

/// Text of one relation in the file syntax.
pub fn format_relation(p: &Presentation, rel: &Form) -> String {
    let field = p.field();
    let names = p.names();
    let mut out = String::new();
    let mut first = true;
    for (m, &c) in rel.terms() {
        let w = m.letters();
        if p.flavor() == Flavor::Lie && w[0] > w[1] {
            continue;
        }
        write_coeff(&mut out, field.signed(c), first);
        first = false;
        if p.flavor() == Flavor::Lie && w[0] < w[1] {
            let _ = write!(out, "[{},{}]", names[w[0] as usize], names[w[1] as usize]);
        } else {
            let parts: Vec<&str> = w.iter().map(|&x| names[x as usize].as_str()).collect();
            out.push_str(&parts.join("*"));
        }
    }
    if first {
        out.push('0');
    }
    out
}

/// Serializes a presentation; [`parse_presentation`] inverts this exactly.
pub fn serialize_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "flavor {}", p.flavor());
    let _ = writeln!(out, "prime {}", p.field().modulus());
    let _ = writeln!(out, "vars {}", p.names().join(", "));
    for rel in p.relations() {
        let _ = writeln!(out, "rel {}", format_relation(p, rel));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_commutative_example() {
        let p = parse_presentation("flavor commutative\nvars x, y\nrel x*x\nrel x*y\nrel y*y*y\n").unwrap();
        assert_eq!(p.flavor(), Flavor::Commutative);
        assert_eq!(p.presentation_type().to_string(), "(2;2,2,3)");
    }

    #[test]
    fn commutative_monomials_are_sorted() {
        let p = parse_presentation("flavor commutative\nvars x, y\nrel y*x - x*y\n").unwrap();
        assert!(p.relations()[0].is_zero());
    }

    #[test]
    fn parses_lie_brackets() {
        let p = parse_presentation("flavor lie\nvars a, b, c\nrel b*b\nrel [a,b] - c*c\nrel [a,c]\n").unwrap();
        let f = p.field();
        let rel = &p.relations()[1];
        assert_eq!(rel.coeff(&Monomial::word(vec![0, 1])), f.one());
        assert_eq!(rel.coeff(&Monomial::word(vec![1, 0])), f.one());
        assert_eq!(rel.coeff(&Monomial::word(vec![2, 2])), f.neg(f.one()));
    }

    #[test]
    fn rejects_non_homogeneous() {
        let e = parse_presentation("flavor commutative\nvars x, y\nrel x*x + y\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, column: 11, .. }), "{e:?}");
    }

    #[test]
    fn reports_unknown_generator_position() {
        let e = parse_presentation("flavor noncommutative\nvars x\nrel x*q\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, column: 7, .. }), "{e:?}");
    }

    #[test]
    fn rejects_malformed_and_misplaced() {
        assert!(parse_presentation("flavor noncommutative\nvars x\nrel x*x ^ 2\n").is_err());
        assert!(parse_presentation("flavor noncommutative\nvars x\nrel [x,x]\n").is_err());
        assert!(parse_presentation("flavor commutative\nprime 2\nvars x\n").is_err());
        assert!(parse_presentation("flavor lie\nvars a, b\nrel a*b\n").is_err());
        assert!(parse_presentation("vars x\nrel x*x\n").is_err());
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_presentation("flavor noncommutative\nprime 7\nvars x\nrel 1/2*x*x\n").unwrap();
        let c = p.relations()[0].coeff(&Monomial::word(vec![0, 0]));
        assert_eq!(c.value(), 4);
        assert!(parse_presentation("flavor noncommutative\nprime 7\nvars x\nrel 1/7*x*x\n").is_err());
    }

    #[test]
    fn serialize_round_trip() {
        let text = "flavor lie\nprime 2147483647\nvars a, b, c\nrel b*b\nrel [a,b] - c*c\nrel 3*[a,c]\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(serialize_presentation(&p), text);
        assert_eq!(parse_presentation(&serialize_presentation(&p)).unwrap(), p);
    }

    #[test]
    fn forced_prime_overrides_the_file() {
        let f = PrimeField::new(5).unwrap();
        let p = parse_presentation_over("flavor noncommutative\nprime 7\nvars x\nrel 6*x*x\n", Some(f)).unwrap();
        assert_eq!(p.field().modulus(), 5);
        assert_eq!(p.relations()[0].coeff(&Monomial::word(vec![0, 0])).value(), 1);
    }
}
